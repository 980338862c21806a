// Partial transpose and partial trace on multipartite density matrices.
#pragma once

#include <set>

#include "ybx/matrix.hpp"

namespace ybx {

/// Transpose the second factor of a bipartite operator on C^dim_a (x) C^dim_b:
/// entry ((i,j),(k,l)) of the result is entry ((i,l),(k,j)) of rho.
inline ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dim_a,
                                       std::size_t dim_b) {
  const std::size_t d = dim_a * dim_b;
  if (!rho.is_square() || rho.rows() != d)
    throw std::invalid_argument("partial_transpose: matrix is " + rho.shape() +
                                " but subsystems give dimension " + std::to_string(d));
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j)
      for (std::size_t k = 0; k < dim_a; ++k)
        for (std::size_t l = 0; l < dim_b; ++l)
          out(i * dim_b + j, k * dim_b + l) = rho(i * dim_b + l, k * dim_b + j);
  return out;
}

/// Reduced density matrix on the kept sites (original site order preserved).
inline ComplexMatrix partial_trace(const ComplexMatrix& rho,
                                   const std::vector<std::size_t>& dims,
                                   const std::set<std::size_t>& keep) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (!rho.is_square() || rho.rows() != total)
    throw std::invalid_argument("partial_trace: matrix is " + rho.shape() +
                                " but site dimensions give " + std::to_string(total));
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  for (std::size_t s : keep)
    if (s >= dims.size())
      throw std::invalid_argument("partial_trace: keep site " + std::to_string(s) +
                                  " out of range for " + std::to_string(dims.size()) +
                                  " sites");

  const std::size_t n = dims.size();
  std::vector<std::size_t> kept, traced;
  for (std::size_t s = 0; s < n; ++s)
    (keep.count(s) ? kept : traced).push_back(s);

  std::size_t kept_dim = 1, traced_dim = 1;
  for (std::size_t s : kept) kept_dim *= dims[s];
  for (std::size_t s : traced) traced_dim *= dims[s];

  // strides of each site index in the flat row-major state index
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t s = n; s-- > 1;) stride[s - 1] = stride[s] * dims[s];

  auto flat_index = [&](const std::vector<std::size_t>& sites, std::size_t packed,
                        std::size_t base) {
    // unpack `packed` over `sites` (row-major within that subset) onto `base`
    for (std::size_t s = sites.size(); s-- > 0;) {
      base += (packed % dims[sites[s]]) * stride[sites[s]];
      packed /= dims[sites[s]];
    }
    return base;
  };

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t r = 0; r < kept_dim; ++r)
    for (std::size_t c = 0; c < kept_dim; ++c) {
      const std::size_t rbase = flat_index(kept, r, 0);
      const std::size_t cbase = flat_index(kept, c, 0);
      cplx sum = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t)
        sum += rho(flat_index(traced, t, rbase), flat_index(traced, t, cbase));
      out(r, c) = sum;
    }
  return out;
}

}  // namespace ybx
