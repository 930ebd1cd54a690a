#pragma once

#include "dhl/geometry.hpp"
#include "dhl/params.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <vector>

namespace dhl {

// Which factor enters the horizontal coupling J_{m,n}:
//   corrected: sqrt(m (N+1-m-n) (a-b+1-m) (c+N+m+n-1))
//   printed:   same with (c+N+m+n+1); kept only so the eigen-relation check
//              can be shown to reject it.
enum class CouplingVariant { corrected, printed };

// Couplings indexed by site (Triangle order). J is the weight of the edge
// (i-1,j)-(i,j), L of the edge (i,j)-(i+1,j-1), B is the on-site field.
struct CouplingSet {
  Triangle lattice{1};
  std::vector<double> J;
  std::vector<double> L;
  std::vector<double> B;

  // Zero outside the lattice.
  double J_at(const Site& s) const;
  double L_at(const Site& s) const;
  double B_at(const Site& s) const;
};

// Throws ParameterError if the parameters are inadmissible or a square-root
// argument comes out negative.
CouplingSet couplings(const ModelParams& p, CouplingVariant variant = CouplingVariant::corrected);

struct Edge {
  Site from;
  Site to;
  char kind;  // 'J' horizontal, 'L' diagonal
  double weight;
};

// Single-excitation Hamiltonian, dense and exactly symmetric.
struct Hamiltonian {
  ModelParams params;
  CouplingVariant variant = CouplingVariant::corrected;
  CouplingSet couplings;
  Eigen::MatrixXd matrix;

  const Triangle& lattice() const noexcept { return couplings.lattice; }
  std::vector<Edge> edges() const;
};

Hamiltonian assemble(const ModelParams& p, CouplingVariant variant = CouplingVariant::corrected);

// {"N", "a", "b", "c", "variant", "sites": [[i,j],...], "edges": [{"from","to","kind","weight"}],
//  "diagonal": [{"site","field"}]}
nlohmann::json to_json(const Hamiltonian& h);

}  // namespace dhl
