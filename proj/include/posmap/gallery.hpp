/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_GALLERY_HPP
#define POSMAP_GALLERY_HPP

#include <string>
#include <vector>

#include "posmap/linmap.hpp"

namespace posmap {

LinMap gallery_identity(std::size_t n);
LinMap gallery_transpose(std::size_t n);
// The trace map x -> Tr(x) * 1; its Choi matrix is the identity.
LinMap gallery_trace(std::size_t n);
// The Choi map on B(C^3): positive, neither 2-positive nor 2-copositive.
LinMap gallery_choi3();
// The reduction family Tr - lambda * id on B(C^n); k-positive iff lambda <= 1/k.
LinMap gallery_reduction(double lambda, std::size_t n);
// AdV: a -> V a V* with V: K -> H (dimH x dimK).
LinMap gallery_adv(const CMatrix &v);

struct GalleryParams {
  std::size_t dim = 3;
  double param = 1.0;
  const CMatrix *v = nullptr; // required for "adv"
};

// Dispatch by name: identity, transpose, trace, choi3, reduction, adv.
// Throws InvalidInput for unknown names or missing parameters.
LinMap gallery(const std::string &name, const GalleryParams &params = {});

struct GalleryEntry {
  std::string name;
  std::string description;
  std::string parameters;
};
std::vector<GalleryEntry> gallery_entries();

} // namespace posmap

#endif
