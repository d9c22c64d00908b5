#include "gac/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gac {

namespace {

Eigen::Index product_dim(const std::vector<int>& dims) {
  Eigen::Index d = 1;
  for (int x : dims) d *= x;
  return d;
}

void check_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("local_dims must be nonempty");
  for (int d : dims)
    if (d < 2) throw std::invalid_argument("local dimensions must be >= 2");
}

// Strides for the party-0-most-significant flat index.
std::vector<Eigen::Index> strides_of(const std::vector<int>& dims) {
  std::vector<Eigen::Index> strides(dims.size());
  Eigen::Index s = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    strides[i] = s;
    s *= dims[i];
  }
  return strides;
}

}  // namespace

PureState::PureState(Eigen::VectorXcd amplitudes, std::vector<int> local_dims)
    : amplitudes_(std::move(amplitudes)), local_dims_(std::move(local_dims)) {
  check_dims(local_dims_);
  if (amplitudes_.size() != product_dim(local_dims_))
    throw std::invalid_argument("amplitude count does not match local dimensions");
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("state vector is not normalized");
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries, std::vector<int> local_dims)
    : entries_(std::move(entries)), local_dims_(std::move(local_dims)) {
  check_dims(local_dims_);
  const Eigen::Index d = product_dim(local_dims_);
  if (entries_.rows() != d || entries_.cols() != d)
    throw std::invalid_argument("density matrix shape does not match local dimensions");
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(entries_.trace().real() - 1.0) > 1e-10 ||
      std::abs(entries_.trace().imag()) > 1e-10)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::projector(const PureState& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint(), psi.local_dims());
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("spectrum must be nonempty");
  double sum = 0;
  for (double& v : values_) {
    if (v < -1e-10 || v > 1.0 + 1e-10)
      throw std::invalid_argument("spectrum value outside [0,1] beyond tolerance");
    v = std::clamp(v, 0.0, 1.0);
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("spectrum does not sum to 1");
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

int Spectrum::rank() const {
  return static_cast<int>(std::count_if(values_.begin(), values_.end(),
                                        [](double v) { return v > kZeroTol; }));
}

Spectrum reduced_spectrum(const PureState& state, const Bipartition& part) {
  const auto& dims = state.local_dims();
  const int n = state.num_parties();
  if (part.n() != n)
    throw std::invalid_argument("bipartition party count does not match state");
  if (n < 2) throw std::invalid_argument("reduced_spectrum needs >= 2 parties");

  const std::vector<int>& side_s = part.parties();
  const std::vector<int> side_c = part.complement_parties();

  Eigen::Index dim_s = 1, dim_c = 1;
  for (int p : side_s) dim_s *= dims[p];
  for (int p : side_c) dim_c *= dims[p];

  // Reshape amplitudes into a dim_s x dim_c matrix; parties of S index rows.
  // Row/col offsets of each party precomputed so non-contiguous S costs the
  // same as a prefix split.
  const auto strides = strides_of(dims);
  std::vector<Eigen::Index> row_stride(n, 0), col_stride(n, 0);
  {
    Eigen::Index s = 1;
    for (int i = static_cast<int>(side_s.size()) - 1; i >= 0; --i) {
      row_stride[side_s[i]] = s;
      s *= dims[side_s[i]];
    }
    s = 1;
    for (int i = static_cast<int>(side_c.size()) - 1; i >= 0; --i) {
      col_stride[side_c[i]] = s;
      s *= dims[side_c[i]];
    }
  }

  Eigen::MatrixXcd m(dim_s, dim_c);
  const auto& amps = state.amplitudes();
  for (Eigen::Index idx = 0; idx < amps.size(); ++idx) {
    Eigen::Index row = 0, col = 0;
    for (int p = 0; p < n; ++p) {
      const Eigen::Index digit = (idx / strides[p]) % dims[p];
      row += digit * row_stride[p];
      col += digit * col_stride[p];
    }
    m(row, col) = amps[idx];
  }

  Eigen::VectorXd sv;
  if (std::min(dim_s, dim_c) <= 16) {
    sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
  } else {
    sv = Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
  }

  std::vector<double> values(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    double v = sv[i] * sv[i];
    values[i] = v > kZeroTol ? std::min(v, 1.0) : 0.0;
  }
  // Renormalization drift from the clamp is within the Spectrum tolerance.
  return Spectrum(std::move(values));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const auto& dims = rho.local_dims();
  const int n = rho.num_parties();
  if (keep.empty() || static_cast<int>(keep.size()) >= n)
    throw std::invalid_argument("keep must be a nonempty proper subset of parties");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n)
      throw std::invalid_argument("kept party index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("kept parties must be strictly increasing");
  }

  const auto strides = strides_of(dims);
  std::vector<bool> kept(n, false);
  for (int p : keep) kept[p] = true;

  std::vector<int> out_dims;
  for (int p : keep) out_dims.push_back(dims[p]);
  std::vector<Eigen::Index> out_stride(n, 0);
  {
    Eigen::Index s = 1;
    for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
      out_stride[keep[i]] = s;
      s *= dims[keep[i]];
    }
  }

  const Eigen::Index d = rho.dim();
  Eigen::Index dout = 1;
  for (int x : out_dims) dout *= x;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dout, dout);

  for (Eigen::Index i = 0; i < d; ++i) {
    Eigen::Index ri = 0;
    for (int p = 0; p < n; ++p)
      if (kept[p]) ri += ((i / strides[p]) % dims[p]) * out_stride[p];
    for (Eigen::Index j = 0; j < d; ++j) {
      bool same_env = true;
      Eigen::Index rj = 0;
      for (int p = 0; p < n; ++p) {
        const Eigen::Index di = (i / strides[p]) % dims[p];
        const Eigen::Index dj = (j / strides[p]) % dims[p];
        if (kept[p]) {
          rj += dj * out_stride[p];
        } else if (di != dj) {
          same_env = false;
          break;
        }
      }
      if (same_env) out(ri, rj) += rho.entries()(i, j);
    }
  }
  return DensityMatrix(std::move(out), std::move(out_dims));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries() - sigma.entries(),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

std::vector<std::pair<double, PureState>> spectral_decomposition(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries());
  std::vector<std::pair<double, PureState>> out;
  // descending weights
  for (Eigen::Index k = es.eigenvalues().size() - 1; k >= 0; --k) {
    const double w = es.eigenvalues()[k];
    if (w <= kZeroTol) continue;
    Eigen::VectorXcd v = es.eigenvectors().col(k);
    v /= v.norm();
    out.emplace_back(w, PureState(std::move(v), rho.local_dims()));
  }
  return out;
}

PureState apply_local_unitary(const PureState& state, int party, const Eigen::MatrixXcd& u) {
  const auto& dims = state.local_dims();
  const int n = state.num_parties();
  if (party < 0 || party >= n) throw std::invalid_argument("party index out of range");
  const int d = dims[party];
  if (u.rows() != d || u.cols() != d)
    throw std::invalid_argument("unitary shape does not match party dimension");

  const auto strides = strides_of(dims);
  const Eigen::Index stride = strides[party];
  const Eigen::Index block = stride * d;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.dim());
  const auto& amps = state.amplitudes();
  for (Eigen::Index base = 0; base < state.dim(); base += block) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      for (int a = 0; a < d; ++a) {
        Complex acc = 0;
        for (int b = 0; b < d; ++b) acc += u(a, b) * amps[base + b * stride + off];
        out[base + a * stride + off] = acc;
      }
    }
  }
  return PureState(std::move(out), dims);
}

PureState permute_parties(const PureState& state, const std::vector<int>& perm) {
  const auto& dims = state.local_dims();
  const int n = state.num_parties();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(n, false);
  std::vector<int> out_dims(n);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || seen[perm[i]])
      throw std::invalid_argument("not a permutation");
    seen[perm[i]] = true;
    out_dims[i] = dims[perm[i]];
  }

  const auto in_strides = strides_of(dims);
  const auto out_strides = strides_of(out_dims);
  Eigen::VectorXcd out(state.dim());
  const auto& amps = state.amplitudes();
  for (Eigen::Index idx = 0; idx < state.dim(); ++idx) {
    Eigen::Index target = 0;
    for (int i = 0; i < n; ++i)
      target += ((idx / in_strides[perm[i]]) % dims[perm[i]]) * out_strides[i];
    out[target] = amps[idx];
  }
  return PureState(std::move(out), std::move(out_dims));
}

double projector_distance(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("projector_distance: dimension mismatch");
  // 2*sqrt(1 - |<a|b>|^2), computed from the component of b orthogonal to a:
  // the direct formula loses ~8 digits near coinciding states.
  const std::complex<double> ov = a.amplitudes().dot(b.amplitudes());
  const Eigen::VectorXcd perp = b.amplitudes() - ov * a.amplitudes();
  return 2.0 * std::min(1.0, perp.norm());
}

}  // namespace gac
