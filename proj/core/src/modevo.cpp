// Copyright 2026 The qroute Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qroute/modevo.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <numbers>
#include <ostream>
#include <string>

#include "qroute/errors.hpp"
#include "symmetric_eigen.hpp"

namespace qroute {

namespace {

void check_dense_size(Eigen::Index n) {
  if (static_cast<std::size_t>(n) > kDenseEvolutionCap) {
    throw ResourceError("dense mode evolution is capped at N = " +
                        std::to_string(kDenseEvolutionCap) + ", got " + std::to_string(n) +
                        "; use evolve_hypercube_fast for programmed hypercubes");
  }
}

}  // namespace

ModeEvolution::ModeEvolution(Eigen::MatrixXcd k, double time, std::uint64_t source_fingerprint)
    : k_(std::move(k)), time_(time), fingerprint_(source_fingerprint) {}

double ModeEvolution::unitarity_defect() const {
  const Eigen::MatrixXcd g = k_.adjoint() * k_;
  return (g - Eigen::MatrixXcd::Identity(k_.rows(), k_.cols())).cwiseAbs().maxCoeff();
}

std::uint64_t fingerprint(const Eigen::MatrixXd& omega) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
      h ^= p[i];
      h *= 1099511628211ULL;
    }
  };
  const auto n = static_cast<std::uint64_t>(omega.rows());
  mix(&n, sizeof n);
  mix(omega.data(), static_cast<std::size_t>(omega.size()) * sizeof(double));
  return h;
}

ModeEvolution evolve_modes(const Eigen::MatrixXd& omega, double t) {
  check_dense_size(omega.rows());
  const auto fp = fingerprint(omega);
  if (t == 0.0) {
    if (omega.rows() != omega.cols()) throw NumericalError("mode evolution: non-square generator");
    return ModeEvolution(Eigen::MatrixXcd::Identity(omega.rows(), omega.cols()), t, fp);
  }
  const auto eig = detail::symmetric_eigen(omega);
  return ModeEvolution(detail::exp_minus_i(eig, t), t, fp);
}

ModeEvolution evolve_modes(const CouplingMatrix& omega, double t) {
  return evolve_modes(omega.matrix(), t);
}

Eigen::Matrix2cd bit_factor(double omega0, double detuning, double t) {
  // exp(-i H t) with H = omega0 X + h Z, h = detuning/2: cos(wt) I - i sin(wt) H / w.
  const double h = 0.5 * detuning;
  const double w = std::hypot(omega0, h);
  Eigen::Matrix2cd f;
  if (w == 0.0) {
    f.setIdentity();
    return f;
  }
  const double c = std::cos(w * t);
  const double s = std::sin(w * t) / w;
  const std::complex<double> i(0.0, 1.0);
  f(0, 0) = c - i * s * h;
  f(1, 1) = c + i * s * h;
  f(0, 1) = f(1, 0) = -i * s * omega0;
  return f;
}

FactoredHypercubeEvolution::FactoredHypercubeEvolution(const SubcubeSplit& split, double t)
    : time_(t) {
  factors_.reserve(static_cast<std::size_t>(split.dimension()));
  for (int j = 0; j < split.dimension(); ++j) {
    const bool channel = (split.channel_mask() >> j) & 1U;
    if (t == 0.0) {
      factors_.push_back(Eigen::Matrix2cd::Identity());
    } else {
      factors_.push_back(bit_factor(split.coupling(), channel ? split.detuning() : 0.0, t));
    }
  }
}

Amplitude FactoredHypercubeEvolution::operator()(NodeId row, NodeId col) const {
  Amplitude prod(1.0, 0.0);
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    prod *= factors_[j](static_cast<Eigen::Index>((row >> j) & 1U),
                        static_cast<Eigen::Index>((col >> j) & 1U));
  }
  return prod;
}

ModeEvolution evolve_hypercube_fast(const SubcubeSplit& split, double t) {
  const auto n = static_cast<Eigen::Index>(split.node_count());
  check_dense_size(n);
  const auto fp = fingerprint(program_subcube_split(split).matrix());
  const FactoredHypercubeEvolution factored(split, t);
  Eigen::MatrixXcd k(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row < n; ++row) {
      k(row, col) = factored(static_cast<NodeId>(row), static_cast<NodeId>(col));
    }
  }
  return ModeEvolution(std::move(k), t, fp);
}

Amplitude transfer_amplitude(const ModeEvolution& k, NodeId sender, NodeId receiver) {
  if (sender >= k.size() || receiver >= k.size()) {
    throw InvalidArgument("transfer_amplitude: node index out of range (N = " +
                          std::to_string(k.size()) + ")");
  }
  return k(receiver, sender);
}

Amplitude transfer_amplitude(const FactoredHypercubeEvolution& k, NodeId sender,
                             NodeId receiver) {
  if (sender >= k.size() || receiver >= k.size()) {
    throw InvalidArgument("transfer_amplitude: node index out of range (N = " +
                          std::to_string(k.size()) + ")");
  }
  return k(receiver, sender);
}

double transfer_time(double omega0) {
  if (!(omega0 > 0.0)) throw InvalidArgument("transfer_time: coupling must be positive");
  return std::numbers::pi / (2.0 * omega0);
}

void write_matrix_text(std::ostream& out, const ModeEvolution& k) {
  auto put = [&out](double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    out.write(buf, res.ptr - buf);
  };
  out << k.size() << ' ';
  put(k.time());
  out << '\n';
  for (std::size_t r = 0; r < k.size(); ++r) {
    for (std::size_t c = 0; c < k.size(); ++c) {
      if (c) out << ' ';
      put(k(r, c).real());
      out << ',';
      put(k(r, c).imag());
    }
    out << '\n';
  }
}

}  // namespace qroute
