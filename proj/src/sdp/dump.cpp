#include "tmac/sdp/dump.hpp"

namespace tmac::sdp {

namespace {

using nlohmann::ordered_json;

// Real and imaginary parts row by row; imag omitted when identically zero.
ordered_json matrix_json(const CMat& m) {
  ordered_json re = ordered_json::array(), im = ordered_json::array();
  bool complex = false;
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json rr = ordered_json::array(), ii = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ii.push_back(m(i, j).imag());
      complex = complex || m(i, j).imag() != 0.0;
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  ordered_json out{{"rows", m.rows()}, {"re", re}};
  if (complex) out["im"] = im;
  return out;
}

}  // namespace

ordered_json to_json(const SdpProblem& p) {
  ordered_json regs = ordered_json::array();
  for (std::size_t i = 0; i < p.layout.names.size(); ++i)
    regs.push_back({{"name", p.layout.names[i]}, {"dim", p.layout.dims[i]}});
  ordered_json targets = ordered_json::array();
  for (const auto& r : p.R) targets.push_back(matrix_json(r));
  return ordered_json{{"m", p.m},
                      {"dimension", p.phi.in_dim},
                      {"registers", regs},
                      {"constraint_blocks", p.phi.block_dims},
                      {"map_entries", p.phi.entries.size()},
                      {"face_dimension", p.face.cols()},
                      {"trace_pi", p.Pi.trace().real()},
                      {"targets", targets}};
}

ordered_json to_json(const SdpSolution& s) {
  return ordered_json{{"value", s.value},
                      {"dual_value", s.dual_value},
                      {"gap", s.gap},
                      {"primal_residual", s.primal_residual},
                      {"dual_residual", s.dual_residual},
                      {"min_dual_slack", s.dual_slack},
                      {"min_eig_rho", s.min_eig_rho},
                      {"iterations", s.iterations},
                      {"constraints_used", s.constraints_used}};
}

ordered_json to_json(const TensorReport& t) {
  return ordered_json{{"lambda", t.lambda},
                      {"primal_residual", t.primal_residual},
                      {"objective", t.objective},
                      {"objective_expected", t.objective_expected},
                      {"min_dual_slack", t.dual_slack},
                      {"dual_value", t.dual_value},
                      {"certified", t.certified},
                      {"blocks", t.blocks},
                      {"largest_block", t.largest_block},
                      {"passed", t.passed}};
}

ordered_json dump(const SdpProblem& p, const SdpSolution& s, const TensorReport* t) {
  ordered_json out{{"problem", to_json(p)}, {"solution", to_json(s)}};
  if (t) out["tensor"] = to_json(*t);
  return out;
}

}  // namespace tmac::sdp
