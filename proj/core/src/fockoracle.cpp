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

#include "qroute/fockoracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include <boost/math/special_functions/binomial.hpp>

#include "qroute/errors.hpp"
#include "symmetric_eigen.hpp"

namespace qroute {

namespace {

constexpr std::uint8_t kTracedOut = 0xFF;

using ModeExpansion = std::vector<std::pair<Occupations, Amplitude>>;

// Expand prod_k (sum_r K(r, k) a_r^dagger)^{n_k} / sqrt(n_k!) |vac>.
ModeExpansion expand_modes(const Occupations& modes, const ModeEvolution& k) {
  const std::size_t n = modes.size();
  FockState::AmplitudeMap current;
  double norm = 1.0;
  for (auto occ : modes) {
    for (int q = 2; q <= occ; ++q) norm /= std::sqrt(static_cast<double>(q));
  }
  current.emplace(Occupations(n, 0), Amplitude(norm, 0.0));
  for (std::size_t src = 0; src < n; ++src) {
    for (int rep = 0; rep < modes[src]; ++rep) {
      FockState::AmplitudeMap next;
      next.reserve(current.size() * n);
      for (const auto& [occ, amp] : current) {
        Occupations target = occ;
        for (std::size_t r = 0; r < n; ++r) {
          const Amplitude kr = k(r, src);
          if (kr == Amplitude(0.0, 0.0)) continue;
          target[r] = static_cast<std::uint8_t>(occ[r] + 1);
          next[target] += amp * kr * std::sqrt(static_cast<double>(occ[r] + 1));
          target[r] = occ[r];
        }
      }
      current = std::move(next);
    }
  }
  return ModeExpansion(current.begin(), current.end());
}

Occupations mode_part(const Occupations& occ, std::size_t aux) {
  return Occupations(occ.begin() + static_cast<std::ptrdiff_t>(aux), occ.end());
}

std::uint64_t occupied_mask(const Occupations& occ, std::size_t aux) {
  std::uint64_t mask = 0;
  for (std::size_t v = aux; v < occ.size(); ++v) {
    if (occ[v]) mask |= std::uint64_t{1} << (v - aux);
  }
  return mask;
}

struct Sector {
  std::vector<std::uint64_t> basis;
  std::unordered_map<std::uint64_t, std::size_t> index;
  detail::SymmetricEigen eig;
  Eigen::VectorXcd phases;
};

Sector build_sector(const CouplingMatrix& omega, int k, double t) {
  const std::size_t n = omega.size();
  const double dim = boost::math::binomial_coefficient<double>(static_cast<unsigned>(n),
                                                               static_cast<unsigned>(k));
  if (dim > static_cast<double>(kMaxQubitSectorDimension)) {
    throw ResourceError("qubit sector with " + std::to_string(k) + " excitations on " +
                        std::to_string(n) + " sites has dimension " +
                        std::to_string(static_cast<long long>(dim)) + " > " +
                        std::to_string(kMaxQubitSectorDimension));
  }
  Sector sec;
  sec.basis.reserve(static_cast<std::size_t>(dim));
  if (k == 0) {
    sec.basis.push_back(0);
  } else {
    // Subsets of size k in increasing order (Gosper's hack).
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = (n == 64) ? 0 : (std::uint64_t{1} << n);
    while (true) {
      sec.basis.push_back(mask);
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      if (r == 0) break;
      mask = (((r ^ mask) >> 2) / c) | r;
      if (limit != 0 && mask >= limit) break;
    }
  }
  for (std::size_t i = 0; i < sec.basis.size(); ++i) sec.index.emplace(sec.basis[i], i);

  const auto d = static_cast<Eigen::Index>(sec.basis.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  const auto& w = omega.matrix();
  for (Eigen::Index i = 0; i < d; ++i) {
    const std::uint64_t mask = sec.basis[static_cast<std::size_t>(i)];
    for (std::size_t u = 0; u < n; ++u) {
      if (!((mask >> u) & 1U)) continue;
      const auto ui = static_cast<Eigen::Index>(u);
      h(i, i) += w(ui, ui);
      for (std::size_t v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) continue;
        const double c = w(ui, static_cast<Eigen::Index>(v));
        if (c == 0.0) continue;
        const std::uint64_t moved = (mask & ~(std::uint64_t{1} << u)) | (std::uint64_t{1} << v);
        h(static_cast<Eigen::Index>(sec.index.at(moved)), i) += c;
      }
    }
  }
  sec.eig = detail::symmetric_eigen(h);
  const Eigen::ArrayXd angle = sec.eig.values.array() * t;
  sec.phases.resize(d);
  sec.phases.real() = angle.cos().matrix();
  sec.phases.imag() = (-angle.sin()).matrix();
  return sec;
}

}  // namespace

std::size_t OccupationsHash::operator()(const Occupations& occ) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto b : occ) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

FockState::FockState(std::size_t modes, std::vector<NodeId> senders, int truncation,
                     NodeModel model)
    : modes_(modes), senders_(std::move(senders)), truncation_(truncation), model_(model) {
  if (modes_ == 0) throw InvalidArgument("Fock state needs at least one mode");
  if (truncation_ < 1 || truncation_ > 254) {
    throw InvalidArgument("Fock truncation must be in [1, 254]");
  }
  if (model_ == NodeModel::kQubit && truncation_ != 1) {
    throw InvalidArgument("qubit network states have truncation 1");
  }
  for (auto s : senders_) {
    if (s >= modes_) throw InvalidArgument("sender " + std::to_string(s) + " out of range");
  }
}

Amplitude FockState::amplitude(const Occupations& occ) const {
  const auto it = amplitudes_.find(occ);
  return it == amplitudes_.end() ? Amplitude(0.0, 0.0) : it->second;
}

void FockState::add(const Occupations& occ, Amplitude a) {
  if (occ.size() != aux_count() + modes_) throw InvalidArgument("occupation tuple has wrong length");
  for (std::size_t i = 0; i < occ.size(); ++i) {
    const int cap = (i < aux_count()) ? 1 : truncation_;
    if (occ[i] > cap) {
      throw ContractViolation("occupation " + std::to_string(occ[i]) + " exceeds truncation " +
                              std::to_string(cap));
    }
  }
  amplitudes_[occ] += a;
}

double FockState::norm() const {
  double sum = 0.0;
  for (const auto& [occ, a] : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

int FockState::network_excitations(const Occupations& occ) const {
  int total = 0;
  for (std::size_t i = aux_count(); i < occ.size(); ++i) total += occ[i];
  return total;
}

int FockState::max_network_excitations() const {
  int best = 0;
  for (const auto& [occ, a] : amplitudes_) best = std::max(best, network_excitations(occ));
  return best;
}

FockState prepare_initial(std::size_t modes, const std::vector<NodeId>& senders, NodeModel model,
                          int truncation) {
  const std::size_t m = senders.size();
  if (m > kMaxSenders) {
    throw ResourceError("at most " + std::to_string(kMaxSenders) + " senders, got " +
                        std::to_string(m));
  }
  auto sorted = senders;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("duplicate sender");
  }
  if (truncation < 0) truncation = (model == NodeModel::kQubit) ? 1 : std::max<int>(1, static_cast<int>(m));
  FockState state(modes, senders, truncation, model);
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(m));
  for (std::uint64_t branch = 0; branch < (std::uint64_t{1} << m); ++branch) {
    Occupations occ(m + modes, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if ((branch >> j) & 1U) {
        occ[j] = 1;
        ++occ[m + senders[j]];
      }
    }
    state.add(occ, Amplitude(amp, 0.0));
  }
  return state;
}

FockState evolve_oscillator(const FockState& state, const ModeEvolution& k) {
  if (state.model() != NodeModel::kOscillator) {
    throw ContractViolation("evolve_oscillator needs an oscillator state; use evolve_qubit");
  }
  if (k.size() != state.mode_count()) {
    throw InvalidArgument("mode evolution size does not match the state");
  }
  const int excitations = state.max_network_excitations();
  if (state.truncation() < excitations) {
    throw ContractViolation("truncation n_max=" + std::to_string(state.truncation()) +
                            " is below the " + std::to_string(excitations) +
                            " excitations present; refusing to truncate");
  }
  const std::size_t aux = state.aux_count();
  FockState out(state.mode_count(), state.senders(), state.truncation(), state.model());
  std::unordered_map<Occupations, ModeExpansion, OccupationsHash> cache;
  for (const auto& [occ, amp] : state.amplitudes()) {
    const Occupations modes = mode_part(occ, aux);
    auto it = cache.find(modes);
    if (it == cache.end()) it = cache.emplace(modes, expand_modes(modes, k)).first;
    Occupations target = occ;
    for (const auto& [evolved, coeff] : it->second) {
      std::copy(evolved.begin(), evolved.end(), target.begin() + static_cast<std::ptrdiff_t>(aux));
      out.add(target, amp * coeff);
    }
  }
  return out;
}

FockState evolve_oscillator(const FockState& state, const CouplingMatrix& omega, double t) {
  return evolve_oscillator(state, evolve_modes(omega, t));
}

FockState evolve_qubit(const FockState& state, const CouplingMatrix& omega, double t) {
  if (state.model() != NodeModel::kQubit) {
    throw ContractViolation("evolve_qubit needs a hard-core (qubit) state");
  }
  if (omega.size() != state.mode_count()) {
    throw InvalidArgument("coupling matrix size does not match the state");
  }
  if (state.mode_count() > 64) throw ResourceError("qubit networks are limited to 64 sites");
  if (state.max_network_excitations() > kMaxQubitExcitations) {
    throw ResourceError("qubit evolution supports at most " +
                        std::to_string(kMaxQubitExcitations) + " network excitations");
  }
  const std::size_t aux = state.aux_count();
  std::map<int, Sector> sectors;
  FockState out(state.mode_count(), state.senders(), 1, NodeModel::kQubit);
  for (const auto& [occ, amp] : state.amplitudes()) {
    const std::uint64_t mask = occupied_mask(occ, aux);
    const int k = std::popcount(mask);
    auto it = sectors.find(k);
    if (it == sectors.end()) it = sectors.emplace(k, build_sector(omega, k, t)).first;
    const Sector& sec = it->second;
    const auto col = static_cast<Eigen::Index>(sec.index.at(mask));
    // Column `col` of V diag(phases) V^T.
    const Eigen::VectorXcd weights =
        sec.phases.cwiseProduct(sec.eig.vectors.row(col).transpose().cast<Amplitude>());
    const Eigen::VectorXcd column = sec.eig.vectors.cast<Amplitude>() * weights;
    Occupations target = occ;
    for (Eigen::Index i = 0; i < column.size(); ++i) {
      if (column(i) == Amplitude(0.0, 0.0)) continue;
      const std::uint64_t m = sec.basis[static_cast<std::size_t>(i)];
      for (std::size_t v = 0; v < state.mode_count(); ++v) target[aux + v] = (m >> v) & 1U;
      out.add(target, amp * column(i));
    }
  }
  return out;
}

PairFidelity bell_fidelity(const FockState& state, std::size_t aux_index, NodeId receiver,
                           double phi) {
  if (aux_index >= state.aux_count()) throw InvalidArgument("bell_fidelity: aux index out of range");
  if (receiver >= state.mode_count()) throw InvalidArgument("bell_fidelity: receiver out of range");
  const double nrm = state.norm();
  if (std::abs(nrm - 1.0) > 1e-8) {
    throw ContractViolation("bell_fidelity: state norm is " + std::to_string(nrm));
  }
  const std::size_t rpos = state.aux_count() + receiver;
  const Amplitude correction = std::polar(1.0, phi);
  // Project onto |00> + |11> of (aux, receiver) and keep the rest as environment.
  FockState::AmplitudeMap overlap;
  for (const auto& [occ, amp] : state.amplitudes()) {
    const auto b = occ[aux_index];
    const auto n = occ[rpos];
    if (b != n || n > 1) continue;
    Occupations env = occ;
    env[aux_index] = kTracedOut;
    env[rpos] = kTracedOut;
    overlap[env] += (b == 1) ? amp * correction : amp;
  }
  double f = 0.0;
  for (const auto& [env, a] : overlap) f += std::norm(a);
  PairFidelity out;
  out.sender = state.senders()[aux_index];
  out.receiver = receiver;
  out.fidelity = std::clamp(0.5 * f, 0.0, 1.0);
  out.correction_phase = wrap_phase(phi);
  out.method = FidelityMethod::kExactOracle;
  return out;
}

TransferPairs qubit_compatible_pairs(const SubcubeSplit& split) {
  TransferPairs pairs;
  for (NodeId v = 0; v < split.node_count(); ++v) {
    if ((v & split.transfer_mask()) == 0) {
      pairs.senders.push_back(v);
      pairs.receivers.push_back(split.antipode(v));
    }
  }
  return pairs;
}

TransferPairs massively_parallel_pairs(const SubcubeSplit& split) {
  TransferPairs pairs;
  for (NodeId v = 0; v < split.node_count(); ++v) {
    pairs.senders.push_back(v);
    pairs.receivers.push_back(split.antipode(v));
  }
  return pairs;
}

std::vector<PairFidelity> parallel_fidelities(const std::vector<NodeId>& senders,
                                              const std::vector<NodeId>& receivers,
                                              const SubcubeSplit& split, double t,
                                              NodeModel model) {
  if (senders.size() != receivers.size()) {
    throw InvalidArgument("parallel_fidelities: sender and receiver lists differ in length");
  }
  for (std::size_t j = 0; j < senders.size(); ++j) {
    if (senders[j] >= split.node_count() || receivers[j] != split.antipode(senders[j])) {
      throw ContractViolation("parallel_fidelities: pair " + std::to_string(j) +
                              " is not a sender -> subcube-antipode transfer");
    }
  }
  const auto initial = prepare_initial(split.node_count(), senders, model);
  FockState final_state = (model == NodeModel::kOscillator)
                               ? evolve_oscillator(initial, evolve_hypercube_fast(split, t))
                               : evolve_qubit(initial, program_subcube_split(split), t);
  std::vector<PairFidelity> out;
  out.reserve(senders.size());
  for (std::size_t j = 0; j < senders.size(); ++j) {
    const double phi = phase_correction(split, senders[j], receivers[j], t);
    out.push_back(bell_fidelity(final_state, j, receivers[j], phi));
  }
  return out;
}

}  // namespace qroute
