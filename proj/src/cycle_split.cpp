#include "cuntzcf/cycle_split.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cuntzcf/cuntz.hpp"
#include "cuntzcf/errors.hpp"

namespace cuntzcf {

std::complex<double> root_of_unity_power(long long k, std::size_t n) {
  const auto nn = static_cast<long long>(n);
  k = ((k % nn) + nn) % nn;
  if ((4 * k) % nn == 0) {
    switch ((4 * k) / nn) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

CycleSplit cycle_dft_split(const Word& J0, std::size_t n) {
  canonical_cycle(J0);  // EmptyWord / NotPrimitive
  if (n < 2) throw BadMultiplicity("cycle split needs multiplicity n >= 2, got " + std::to_string(n));

  CycleSplit out;
  out.J0 = J0;
  out.n = n;
  const auto nn = static_cast<long long>(n);
  for (long long r = 0; r < nn; ++r) {
    CycleSpaceVector w(n);
    for (long long m = 0; m < nn; ++m) w[static_cast<std::size_t>(m)] = root_of_unity_power(r * m, n);
    out.eigenvectors.push_back(std::move(w));
    out.eigenvalues.push_back(root_of_unity_power(-r, n));
  }

  // s_{J0} e_m = e_{m+1 mod n}, since s_{J0}^n v = s_J v = v.
  auto shift = [n](const CycleSpaceVector& w) {
    CycleSpaceVector out(n);
    for (std::size_t m = 0; m < n; ++m) out[(m + 1) % n] = w[m];
    return out;
  };

  const std::string inst = "J0=(" + format_word(J0) + ") n=" + std::to_string(n);
  for (std::size_t r = 0; r < n; ++r) {
    const CycleSpaceVector sw = shift(out.eigenvectors[r]);
    double norm2 = 0.0;
    for (std::size_t m = 0; m < n; ++m) norm2 += std::norm(sw[m] - out.eigenvalues[r] * out.eigenvectors[r][m]);
    out.eigen_residual = std::max(out.eigen_residual, std::sqrt(norm2));
    for (std::size_t s = r + 1; s < n; ++s) {
      std::complex<double> inner = 0.0;
      for (std::size_t m = 0; m < n; ++m) inner += std::conj(out.eigenvectors[r][m]) * out.eigenvectors[s][m];
      out.orthogonality_residual = std::max(out.orthogonality_residual, std::abs(inner));
    }
  }

  Word J;
  for (std::size_t k = 0; k < n; ++k) J.insert(J.end(), J0.begin(), J0.end());
  out.reducible = !is_nonperiodic(J);

  out.report.add("dft_orthogonality", inst, out.orthogonality_residual <= kCycleSplitTolerance,
                 out.orthogonality_residual);
  out.report.add("dft_eigenrelation", inst, out.eigen_residual <= kCycleSplitTolerance, out.eigen_residual);
  out.report.records.push_back({"irreducibility", "P(" + format_word(J) + ")",
                                out.reducible ? "reducible" : "fail", 0.0});
  return out;
}

}  // namespace cuntzcf
