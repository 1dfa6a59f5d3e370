#pragma once

#include <string>
#include <vector>

#include "statel/rational.hpp"

namespace statel {

struct IntervalPiece {
  Rat lo;
  Rat hi;
  bool lo_closed = true;
  bool hi_closed = true;
  bool operator==(const IntervalPiece&) const = default;
};

// A finite union of disjoint subintervals of [0,1].
// Pieces are kept sorted ascending; a singleton piece has both ends closed.
class IntervalSet {
 public:
  IntervalSet() = default;

  // Sorts and validates: bounds inside [0,1], lo <= hi, singletons closed,
  // pieces pairwise disjoint. Throws ModelError(Fault::BadInterval).
  static IntervalSet validated(std::vector<IntervalPiece> pieces);
  static IntervalSet singleton(const Rat& p);
  static IntervalSet closed(const Rat& lo, const Rat& hi);

  bool contains(const Rat& p) const;
  const std::vector<IntervalPiece>& pieces() const { return pieces_; }

  // Concrete syntax: "{p}" for a single singleton piece, else
  // pieces like "[a,b)" joined with 'u'.
  std::string str() const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<IntervalPiece> pieces_;
};

}  // namespace statel
