#include "solenoid/point.hpp"

#include <algorithm>

#include "solenoid/error.hpp"

namespace solenoid {

namespace detail {
TruncatedPoint unchecked_point(PrimeSeqSpec seq, std::vector<Angle> coords) {
  return TruncatedPoint(TruncatedPoint::Unchecked{}, std::move(seq), std::move(coords));
}
}  // namespace detail

TruncatedPoint::TruncatedPoint(PrimeSeqSpec seq, std::vector<Angle> coords)
    : seq_(std::move(seq)), coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorKind::InvalidArgument, "a truncated point needs depth >= 1");
  TermCursor cursor(seq_);
  for (std::size_t n = 0; n + 1 < coords_.size(); ++n) {
    Prime p = cursor.next();
    if (angle_scale(coords_[n + 1], p) != coords_[n]) {
      throw Error(ErrorKind::Incompatible,
                  "coordinate " + std::to_string(n + 1) + " (" + coords_[n].to_string() +
                      ") is not " + std::to_string(p) + " * coordinate " + std::to_string(n + 2) +
                      " (" + coords_[n + 1].to_string() + ")");
    }
  }
}

TruncatedPoint TruncatedPoint::from_top(PrimeSeqSpec seq, std::uint64_t depth, const Angle& top) {
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "a truncated point needs depth >= 1");
  std::vector<Prime> terms;
  TermCursor cursor(seq);
  for (std::uint64_t n = 1; n < depth; ++n) terms.push_back(cursor.next());
  std::vector<Angle> coords(depth);
  coords[depth - 1] = top;
  for (std::uint64_t n = depth - 1; n >= 1; --n) {
    coords[n - 1] = angle_scale(coords[n], terms[n - 1]);
  }
  return detail::unchecked_point(std::move(seq), std::move(coords));
}

bool TruncatedPoint::is_identity() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Angle& a) { return a.is_zero(); });
}

std::string TruncatedPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) out += ", ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

bool coords_less(const TruncatedPoint& a, const TruncatedPoint& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(),
                                      b.coords().end());
}

TruncatedPoint identity(const PrimeSeqSpec& seq, std::uint64_t depth) {
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "a truncated point needs depth >= 1");
  return detail::unchecked_point(seq, std::vector<Angle>(depth));
}

TruncatedPoint multiply(const TruncatedPoint& x, const TruncatedPoint& y) {
  if (x.seq() != y.seq()) {
    throw Error(ErrorKind::MismatchedSpec, "points live on different solenoids: " +
                                               x.seq().to_string() + " vs " + y.seq().to_string());
  }
  if (x.depth() != y.depth()) {
    throw Error(ErrorKind::MismatchedDepth, "depths differ: " + std::to_string(x.depth()) +
                                                " vs " + std::to_string(y.depth()));
  }
  std::vector<Angle> coords;
  coords.reserve(x.depth());
  for (std::size_t i = 0; i < x.depth(); ++i) {
    coords.push_back(angle_add(x.coords()[i], y.coords()[i]));
  }
  return detail::unchecked_point(x.seq(), std::move(coords));
}

TruncatedPoint inverse(const TruncatedPoint& x) {
  std::vector<Angle> coords;
  coords.reserve(x.depth());
  for (const auto& a : x.coords()) coords.push_back(angle_negate(a));
  return detail::unchecked_point(x.seq(), std::move(coords));
}

TruncatedPoint extend_back(const TruncatedPoint& x, std::uint64_t new_depth) {
  if (new_depth < x.depth()) {
    throw Error(ErrorKind::InvalidArgument, "extend_back cannot reduce depth " +
                                                std::to_string(x.depth()) + " to " +
                                                std::to_string(new_depth));
  }
  std::vector<Angle> coords = x.coords();
  TermCursor cursor(x.seq(), x.depth());
  for (std::uint64_t n = x.depth(); n < new_depth; ++n) {
    Prime p = cursor.next();  // p_n links level n to level n + 1
    try {
      coords.push_back(angle_unscale(coords.back(), p));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotCoprime) throw;
      throw Error(ErrorKind::NotCoprime,
                  "no canonical lift to level " + std::to_string(n + 1) + ": p_" +
                      std::to_string(n) + " = " + std::to_string(p) +
                      " divides the order " + coords.back().den().str());
    }
  }
  return detail::unchecked_point(x.seq(), std::move(coords));
}

Angle bonding(const PrimeSeqSpec& seq, std::uint64_t m, std::uint64_t n, const Angle& a) {
  return angle_scale(a, term_product(seq, m, n));
}

Angle project(const TruncatedPoint& x, std::uint64_t n) {
  if (n < 1 || n > x.depth()) {
    throw Error(ErrorKind::BadIndex, "projection level " + std::to_string(n) +
                                         " outside 1.." + std::to_string(x.depth()));
  }
  return x.at(n);
}

TruncatedPoint shift_iso(const TruncatedPoint& x, std::uint64_t m) {
  if (m < 1 || m > x.depth()) {
    throw Error(ErrorKind::BadIndex,
                "shift " + std::to_string(m) + " outside 1.." + std::to_string(x.depth()));
  }
  std::vector<Angle> coords(x.coords().begin() + static_cast<std::ptrdiff_t>(m - 1),
                            x.coords().end());
  return detail::unchecked_point(shift(x.seq(), m - 1), std::move(coords));
}

}  // namespace solenoid
