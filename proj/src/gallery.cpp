/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "posmap/gallery.hpp"

namespace posmap {

LinMap gallery_identity(std::size_t n) {
  if (n == 0)
    throw InvalidInput("gallery identity: dimension must be positive");
  LinMap phi;
  phi.dim_k = n;
  phi.dim_h = n;
  phi.choi = CMatrix(n * n, n * n);
  // C = sum_ij e_ij (x) e_ij, entries delta_{i,a} delta_{j,b} at ((i,a),(j,b))
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      phi.choi(i * n + i, j * n + j) = Complex(1.0, 0.0);
  return phi;
}

LinMap gallery_transpose(std::size_t n) {
  if (n == 0)
    throw InvalidInput("gallery transpose: dimension must be positive");
  LinMap phi;
  phi.dim_k = n;
  phi.dim_h = n;
  phi.choi = CMatrix(n * n, n * n);
  // C = sum_ij e_ij (x) e_ji = swap operator F
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      phi.choi(i * n + j, j * n + i) = Complex(1.0, 0.0);
  return phi;
}

LinMap gallery_trace(std::size_t n) {
  if (n == 0)
    throw InvalidInput("gallery trace: dimension must be positive");
  LinMap phi;
  phi.dim_k = n;
  phi.dim_h = n;
  phi.choi = CMatrix::identity(n * n);
  return phi;
}

LinMap gallery_choi3() {
  const std::size_t n = 3;
  std::vector<CMatrix> images;
  images.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CMatrix img(n, n);
      if (i == j) {
        // diagonal entries: (x11+x33, x11+x22, x22+x33)
        if (i == 0) {
          img(0, 0) = 1.0;
          img(1, 1) = 1.0;
        } else if (i == 1) {
          img(1, 1) = 1.0;
          img(2, 2) = 1.0;
        } else {
          img(0, 0) = 1.0;
          img(2, 2) = 1.0;
        }
      } else {
        img(i, j) = -1.0;
      }
      images.push_back(img);
    }
  return choi_of_action(n, n, images);
}

LinMap gallery_reduction(double lambda, std::size_t n) {
  LinMap tr = gallery_trace(n);
  LinMap id = gallery_identity(n);
  LinMap phi;
  phi.dim_k = n;
  phi.dim_h = n;
  phi.choi = tr.choi - Complex(lambda, 0.0) * id.choi;
  return phi;
}

LinMap gallery_adv(const CMatrix &v) {
  if (v.rows() == 0 || v.cols() == 0)
    throw InvalidInput("gallery adv: V must be nonempty");
  const std::size_t dim_k = v.cols();
  const std::size_t dim_h = v.rows();
  // C_AdV = w w* with w[(i,alpha)] = V[alpha,i]
  LinMap phi;
  phi.dim_k = dim_k;
  phi.dim_h = dim_h;
  phi.choi = CMatrix(dim_k * dim_h, dim_k * dim_h);
  std::vector<Complex> w(dim_k * dim_h);
  for (std::size_t i = 0; i < dim_k; ++i)
    for (std::size_t alpha = 0; alpha < dim_h; ++alpha)
      w[i * dim_h + alpha] = v(alpha, i);
  for (std::size_t r = 0; r < w.size(); ++r)
    for (std::size_t c = 0; c < w.size(); ++c)
      phi.choi(r, c) = w[r] * std::conj(w[c]);
  return phi;
}

LinMap gallery(const std::string &name, const GalleryParams &params) {
  if (name == "identity")
    return gallery_identity(params.dim);
  if (name == "transpose")
    return gallery_transpose(params.dim);
  if (name == "trace")
    return gallery_trace(params.dim);
  if (name == "choi3")
    return gallery_choi3();
  if (name == "reduction")
    return gallery_reduction(params.param, params.dim);
  if (name == "adv") {
    if (params.v == nullptr)
      throw InvalidInput("gallery adv: a V matrix is required");
    return gallery_adv(*params.v);
  }
  throw InvalidInput("gallery: unknown map name '" + name + "'");
}

std::vector<GalleryEntry> gallery_entries() {
  return {
      {"identity", "identity map on B(C^n)", "--dim n"},
      {"transpose", "transpose map on B(C^n)", "--dim n"},
      {"trace", "x -> Tr(x)*1 on B(C^n)", "--dim n"},
      {"choi3", "Choi map on B(C^3)", ""},
      {"reduction", "Tr - lambda*identity on B(C^n)", "--dim n --param lambda"},
      {"adv", "a -> V a V*", "--v-file matrix.json"},
  };
}

} // namespace posmap
