#include "tmac/sdp/layout.hpp"

#include <algorithm>

#include "tmac/core/error.hpp"

namespace tmac::sdp {

int RegisterLayout::total() const {
  int n = 1;
  for (int d : dims) n *= d;
  return n;
}

int RegisterLayout::factor(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) fail(Errc::BadFactor, "no register named '" + name + "'");
  return static_cast<int>(it - names.begin());
}

RegisterLayout RegisterLayout::without(const std::vector<int>& factors) const {
  RegisterLayout r;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (std::find(factors.begin(), factors.end(), static_cast<int>(i)) == factors.end()) {
      r.names.push_back(names[i]);
      r.dims.push_back(dims[i]);
    }
  return r;
}

RegisterLayout RegisterLayout::weak_del() { return {{"Z", "p", "m1", "m2", "k", "a"}, {2, 2, 2, 2, 2, 2}}; }
RegisterLayout RegisterLayout::weak_del_x() { return {{"p", "m1", "m2", "k", "a"}, {2, 2, 2, 2, 2}}; }

CMat partial_trace(const CMat& m, const RegisterLayout& layout, const std::vector<int>& over) {
  const int nf = static_cast<int>(layout.dims.size());
  const int n = layout.total();
  if (m.rows() != n || m.cols() != n) fail(Errc::LengthMismatch, "matrix does not match the layout");
  std::vector<bool> traced(nf, false);
  for (int f : over) {
    if (f < 0 || f >= nf) fail(Errc::BadFactor, "factor index out of range");
    if (traced[f]) fail(Errc::BadFactor, "factor listed twice");
    traced[f] = true;
  }
  // Split every full index into (kept index, traced index).
  std::vector<int> kept_of(n), traced_of(n);
  int kept_dim = 1, traced_dim = 1;
  for (int f = 0; f < nf; ++f) (traced[f] ? traced_dim : kept_dim) *= layout.dims[f];
  for (int i = 0; i < n; ++i) {
    int rem = i, kept = 0, tr = 0, kstride = 1, tstride = 1;
    for (int f = nf - 1; f >= 0; --f) {
      const int d = layout.dims[f], digit = rem % d;
      rem /= d;
      if (traced[f]) {
        tr += digit * tstride;
        tstride *= d;
      } else {
        kept += digit * kstride;
        kstride *= d;
      }
    }
    kept_of[i] = kept;
    traced_of[i] = tr;
  }
  CMat out = CMat::Zero(kept_dim, kept_dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (traced_of[i] == traced_of[j]) out(kept_of[i], kept_of[j]) += m(i, j);
  return out;
}

CMat partial_trace(const CMat& m, const RegisterLayout& layout, const std::vector<std::string>& over) {
  std::vector<int> idx;
  for (const auto& name : over) idx.push_back(layout.factor(name));
  return partial_trace(m, layout, idx);
}

bool is_hermitian(const CMat& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace tmac::sdp
