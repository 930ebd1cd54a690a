#include "dhl/lattice.hpp"

#include "dhl/errors.hpp"

#include <cmath>

namespace dhl {

namespace {

double checked_sqrt(const Rational& radicand, const char* name, const Site& s) {
  if (radicand < 0) {
    throw ParameterError(std::string("negative radicand in ") + name + to_string(s) + " = " +
                         to_string(radicand));
  }
  return std::sqrt(to_double(radicand));
}

nlohmann::json site_json(const Site& s) { return nlohmann::json::array({s.i, s.j}); }

}  // namespace

double CouplingSet::J_at(const Site& s) const {
  return lattice.contains(s) ? J[lattice.index(s)] : 0.0;
}

double CouplingSet::L_at(const Site& s) const {
  return lattice.contains(s) ? L[lattice.index(s)] : 0.0;
}

double CouplingSet::B_at(const Site& s) const {
  return lattice.contains(s) ? B[lattice.index(s)] : 0.0;
}

CouplingSet couplings(const ModelParams& p, CouplingVariant variant) {
  require_valid(p);
  const int N = p.N;
  const int shift = variant == CouplingVariant::corrected ? -1 : 1;
  CouplingSet set;
  set.lattice = Triangle(N);
  const std::size_t M = set.lattice.count();
  set.J.assign(M, 0.0);
  set.L.assign(M, 0.0);
  set.B.assign(M, 0.0);
  for (std::size_t k = 0; k < M; ++k) {
    const Site s = set.lattice.site(k);
    const int m = s.i;
    const int n = s.j;
    const Rational j2 = Rational(m * (N + 1 - m - n)) * (p.a - p.b + 1 - m) * (p.c + N + m + n + shift);
    const Rational l2 = Rational((m + 1) * n) * (p.a - p.b - m) * (p.b - p.c + 1 - n);
    set.J[k] = checked_sqrt(j2, "J", s);
    set.L[k] = checked_sqrt(l2, "L", s);
    set.B[k] = to_double(Rational(m) * (p.a - 2 * p.b + 1 - 2 * m));
  }
  return set;
}

std::vector<Edge> Hamiltonian::edges() const {
  std::vector<Edge> out;
  const Triangle& t = lattice();
  for (std::size_t k = 0; k < t.count(); ++k) {
    const Site s = t.site(k);
    const Site right{s.i + 1, s.j};
    const Site diag{s.i + 1, s.j - 1};
    if (t.contains(right)) out.push_back({s, right, 'J', couplings.J_at(right)});
    if (t.contains(diag)) out.push_back({s, diag, 'L', couplings.L_at(s)});
  }
  return out;
}

Hamiltonian assemble(const ModelParams& p, CouplingVariant variant) {
  Hamiltonian h{p, variant, couplings(p, variant), {}};
  const Triangle& t = h.lattice();
  const auto M = static_cast<Eigen::Index>(t.count());
  h.matrix = Eigen::MatrixXd::Zero(M, M);
  for (Eigen::Index k = 0; k < M; ++k) {
    h.matrix(k, k) = h.couplings.B[static_cast<std::size_t>(k)];
  }
  for (const Edge& e : h.edges()) {
    const auto u = static_cast<Eigen::Index>(t.index(e.from));
    const auto v = static_cast<Eigen::Index>(t.index(e.to));
    h.matrix(u, v) = e.weight;
    h.matrix(v, u) = e.weight;
  }
  return h;
}

nlohmann::json to_json(const Hamiltonian& h) {
  nlohmann::json j;
  j["N"] = h.params.N;
  j["a"] = to_string(h.params.a);
  j["b"] = to_string(h.params.b);
  j["c"] = to_string(h.params.c);
  j["variant"] = h.variant == CouplingVariant::corrected ? "corrected" : "printed";
  const Triangle& t = h.lattice();
  j["dimension"] = t.count();
  auto sites = nlohmann::json::array();
  auto diagonal = nlohmann::json::array();
  for (std::size_t k = 0; k < t.count(); ++k) {
    const Site s = t.site(k);
    sites.push_back(site_json(s));
    diagonal.push_back({{"site", site_json(s)}, {"field", h.couplings.B[k]}});
  }
  auto edges = nlohmann::json::array();
  for (const Edge& e : h.edges()) {
    edges.push_back({{"from", site_json(e.from)},
                     {"to", site_json(e.to)},
                     {"kind", std::string(1, e.kind)},
                     {"weight", e.weight}});
  }
  j["sites"] = std::move(sites);
  j["edges"] = std::move(edges);
  j["diagonal"] = std::move(diagonal);
  return j;
}

}  // namespace dhl
