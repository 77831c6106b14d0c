#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "optcyc/analysis.hpp"
#include "optcyc/claims.hpp"
#include "optcyc/errors.hpp"

namespace py = pybind11;
using namespace optcyc;

namespace {

py::object to_py(const BigInt& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10)); }

py::dict to_py(const WeightDistribution& d) {
  py::dict out;
  for (std::size_t i = 0; i < d.counts.size(); ++i)
    if (d.counts[i] != 0) out[py::int_(i)] = to_py(d.counts[i]);
  return out;
}

TowerPtr make_tower(std::uint32_t q, std::optional<std::string> base, std::optional<std::string> top) {
  const auto pm = factor_prime_power(q);
  if (!pm) throw Error(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
  TowerOptions opt;
  opt.max_q = std::max<std::uint32_t>(q, opt.max_q);
  if (base) opt.base_modulus = parse_coeffs(*base);
  if (top) opt.top_modulus = parse_coeffs(*top);
  return std::make_shared<const FieldTower>(FieldTower::build(pm->first, pm->second, opt));
}

std::vector<std::uint32_t> symbols(const Codeword& w) {
  std::vector<std::uint32_t> v;
  for (auto s : w) v.push_back(s.code);
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Optimal three-weight cyclic codes C(1,q+1,q^2) and their duals";

  py::register_exception<Error>(m, "OptcycError", PyExc_ValueError);

  m.def(
      "field_info",
      [](std::uint32_t q) {
        const auto t = make_tower(q, std::nullopt, std::nullopt);
        py::dict d;
        d["q"] = t->q();
        d["p"] = t->p();
        d["m"] = t->m();
        d["base_modulus"] = t->base_modulus();
        d["top_modulus"] = t->top_modulus();
        return d;
      },
      py::arg("q"));

  m.def(
      "trace_word",
      [](std::uint32_t q, std::uint32_t n, std::uint32_t b, std::optional<std::string> base,
         std::optional<std::string> top) {
        const auto t = make_tower(q, base, top);
        return symbols(irr_codeword(*t, n, Fq2Element::from_log(b)));
      },
      py::arg("q"), py::arg("n"), py::arg("b"), py::arg("base_modulus") = py::none(),
      py::arg("top_modulus") = py::none(), "c(gamma^b) of the irreducible code of length n");

  m.def(
      "primal_distribution",
      [](std::uint32_t q) { return to_py(enumerate_code(*build_central_code(make_tower(q, std::nullopt, std::nullopt)))); },
      py::arg("q"), "weight -> count for C(1,q+1,q^2), by enumeration");

  m.def(
      "dual_distribution",
      [](std::uint32_t q, const std::string& method) {
        if (method == "closed_form") return to_py(dual_distribution_closed_form(q));
        const CodePtr code = build_central_code(make_tower(q, std::nullopt, std::nullopt));
        if (method == "transform") return to_py(dual_distribution_transform(enumerate_code(*code), q, 3));
        if (method == "brute_force") return to_py(enumerate_code(*dual_code(code)));
        throw Error(Errc::InvalidArgument, "method must be brute_force, transform or closed_form");
      },
      py::arg("q"), py::arg("method") = "transform");

  m.def("enumerator", [](std::uint32_t q) {
    return format_enumerator(enumerate_code(*build_central_code(make_tower(q, std::nullopt, std::nullopt))));
  });
  m.def("a4_dual", [](std::uint64_t q) { return to_py(a4_dual(q)); });
  m.def("a5_dual", [](std::uint64_t q) { return to_py(a5_dual(q)); });
  m.def("griesmer_bound", [](std::uint64_t q, std::uint64_t k, std::uint64_t d) { return to_py(griesmer_bound(q, k, d)); });

  m.def(
      "verify",
      [](std::uint32_t q, std::vector<std::string> claims) {
        std::vector<ClaimReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify_claims(q, claims);
        }
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["id"] = r.id;
          d["status"] = std::string(to_string(r.status));
          d["detail"] = r.detail;
          d["witness"] = r.witness ? py::object(py::str(*r.witness)) : py::object(py::none());
          out.append(d);
        }
        return out;
      },
      py::arg("q"), py::arg("claims") = std::vector<std::string>{});

  m.def(
      "decode",
      [](std::uint32_t q, const std::vector<std::uint32_t>& frame) {
        const CodePtr dual = dual_code(build_central_code(make_tower(q, std::nullopt, std::nullopt)));
        Codeword w;
        for (auto s : frame) {
          if (s >= q) throw Error(Errc::InvalidArgument, "symbol outside F_q");
          w.push_back({s});
        }
        const auto r = syndrome_decode(*dual, w);
        py::dict d;
        d["verdict"] = std::string(to_string(r.verdict));
        d["position"] = r.verdict == DecodeVerdict::Corrected ? py::object(py::int_(r.position)) : py::object(py::none());
        d["word"] = symbols(r.word);
        return d;
      },
      py::arg("q"), py::arg("frame"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        const auto r = cli::run(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"));
}
