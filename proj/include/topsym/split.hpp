#pragma once

#include <string>
#include <utility>
#include <vector>

#include "topsym/complex.hpp"
#include "topsym/errors.hpp"
#include "topsym/homology.hpp"

namespace topsym {

/// A domain W whose boundary is covered by two closed regions.
///
/// `positive` and `negative` are subcomplexes of the boundary of W whose union is the
/// whole boundary; `interface` is their intersection.
class BoundarySplit {
 public:
  BoundarySplit() = default;

  BoundarySplit(SimplicialComplex domain, SimplicialComplex positive, SimplicialComplex negative)
      : domain_(std::move(domain)), positive_(std::move(positive)), negative_(std::move(negative)) {
    boundary_ = boundary_subcomplex(domain_);
    require_in_boundary(positive_, "positive");
    require_in_boundary(negative_, "negative");
    for (const auto& s : boundary_.all()) {
      if (!positive_.contains(s) && !negative_.contains(s)) {
        throw InputError("regions do not cover boundary simplex " + to_string(s));
      }
    }
    interface_ = complex_intersection(positive_, negative_);
  }

  /// Negative region defaults to the closure of the boundary outside the positive one.
  static BoundarySplit from_positive(SimplicialComplex domain, SimplicialComplex positive) {
    auto boundary = boundary_subcomplex(domain);
    auto rest = complement_closure(boundary, positive);
    return BoundarySplit(std::move(domain), std::move(positive), std::move(rest));
  }

  static BoundarySplit from_negative(SimplicialComplex domain, SimplicialComplex negative) {
    auto boundary = boundary_subcomplex(domain);
    auto rest = complement_closure(boundary, negative);
    return BoundarySplit(std::move(domain), std::move(rest), std::move(negative));
  }

  /// Empty positive region; the whole boundary is negative.
  static BoundarySplit all_negative(SimplicialComplex domain) {
    auto boundary = boundary_subcomplex(domain);
    return BoundarySplit(std::move(domain), SimplicialComplex{}, std::move(boundary));
  }

  const SimplicialComplex& domain() const noexcept { return domain_; }
  const SimplicialComplex& positive() const noexcept { return positive_; }
  const SimplicialComplex& negative() const noexcept { return negative_; }
  const SimplicialComplex& interface() const noexcept { return interface_; }
  const SimplicialComplex& boundary() const noexcept { return boundary_; }

  ComplexPair positive_pair() const { return ComplexPair(domain_, positive_); }
  ComplexPair negative_pair() const { return ComplexPair(domain_, negative_); }

  /// Same domain with the roles of the two regions exchanged.
  BoundarySplit swapped() const { return BoundarySplit(domain_, negative_, positive_); }

  friend bool operator==(const BoundarySplit&, const BoundarySplit&) = default;

 private:
  static SimplicialComplex complement_closure(const SimplicialComplex& boundary, const SimplicialComplex& region) {
    std::vector<Simplex> keep;
    for (const auto& s : boundary.maximal_simplices()) {
      if (!region.contains(s)) keep.push_back(s);
    }
    return SimplicialComplex::from_maximal(keep);
  }

  void require_in_boundary(const SimplicialComplex& region, const char* label) const {
    for (const auto& s : region.all()) {
      if (!boundary_.contains(s)) {
        throw InputError(std::string(label) + " region simplex " + to_string(s) + " is not on the boundary");
      }
    }
  }

  SimplicialComplex domain_;
  SimplicialComplex positive_;
  SimplicialComplex negative_;
  SimplicialComplex interface_;
  SimplicialComplex boundary_;
};

}  // namespace topsym
