#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aplab/goldbach.hpp"
#include "aplab/linear_systems.hpp"

namespace py = pybind11;
using namespace aplab;

namespace {

linear_system system_from(const std::vector<std::pair<u64, u64>>& forms) {
    linear_system sys;
    for (auto [a, b] : forms) sys.forms.push_back({a, b});
    return sys;
}

} // namespace

PYBIND11_MODULE(_aplab, m) {
    m.doc() = "Least primes in arithmetic progressions, Goldbach decompositions, "
              "admissible linear systems";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<overflow_error>(m, "OverflowedError", PyExc_OverflowError);

    py::enum_<verdict>(m, "Verdict")
        .value("ok", verdict::ok)
        .value("violation", verdict::violation)
        .value("counterexample", verdict::counterexample)
        .value("undecided", verdict::undecided)
        .value("witness", verdict::witness)
        .value("degenerate", verdict::degenerate);

    py::class_<ap_class>(m, "APClass")
        .def(py::init<u64, u64>(), py::arg("k"), py::arg("l"))
        .def_static("unconstrained", &ap_class::unconstrained)
        .def_property_readonly("k", &ap_class::modulus)
        .def_property_readonly("l", &ap_class::residue)
        .def("is_unconstrained", &ap_class::is_unconstrained)
        .def("contains", &ap_class::contains)
        .def("__repr__", [](const ap_class& c) {
            return "APClass(k=" + std::to_string(c.modulus()) +
                   ", l=" + std::to_string(c.residue()) + ")";
        });

    py::class_<crt_class>(m, "CrtClass")
        .def(py::init<u64, u64>(), py::arg("residue"), py::arg("modulus"))
        .def_readonly("residue", &crt_class::residue)
        .def_readonly("modulus", &crt_class::modulus)
        .def("__repr__", [](const crt_class& c) {
            return std::to_string(c.residue) + " mod " + std::to_string(c.modulus);
        });

    // prime machinery
    m.def("is_prime", &is_prime, py::arg("v"));
    m.def("primes_in_range", &primes_in_range, py::arg("lo"), py::arg("hi"),
          py::arg("ceiling") = kDefaultSieveCeiling);
    m.def("prime_count", &prime_count, py::arg("x"));
    m.def("primorial_log", &primorial_log, py::arg("n"));
    m.def("primorial_exact", &primorial_exact, py::arg("n"));
    m.def("crt_merge", &crt_merge, py::arg("c1"), py::arg("c2"));
    m.def("coprimes_of", &coprimes_of, py::arg("n"));
    m.def("euler_phi", &euler_phi, py::arg("n"));

    // least primes
    py::class_<least_prime_record>(m, "LeastPrimeRecord")
        .def_readonly("cls", &least_prime_record::cls)
        .def_readonly("prime", &least_prime_record::prime)
        .def_readonly("candidates_tested", &least_prime_record::candidates_tested)
        .def_readonly("bound_used", &least_prime_record::bound_used);
    py::class_<p_max_record>(m, "PMaxRecord")
        .def_readonly("k", &p_max_record::k)
        .def_readonly("prime", &p_max_record::prime)
        .def_readonly("residue", &p_max_record::residue)
        .def_readonly("primes_scanned", &p_max_record::primes_scanned)
        .def_readonly("bound_used", &p_max_record::bound_used);
    py::class_<kanold_record>(m, "KanoldRecord")
        .def_readonly("k", &kanold_record::k)
        .def_readonly("p_k", &kanold_record::p_k)
        .def_readonly("residue", &kanold_record::residue)
        .def_readonly("verdict", &kanold_record::v);
    py::class_<chowla_record>(m, "ChowlaRecord")
        .def_readonly("k", &chowla_record::k)
        .def_readonly("p_k", &chowla_record::p_k)
        .def_readonly("exponent", &chowla_record::exponent);
    py::class_<chowla_report>(m, "ChowlaReport")
        .def_readonly("by_exponent", &chowla_report::by_exponent)
        .def_readonly("max_exponent", &chowla_report::max_exponent)
        .def_readonly("achieving_k", &chowla_report::achieving_k);
    py::class_<threshold_violation>(m, "ThresholdViolation")
        .def_readonly("key", &threshold_violation::key)
        .def_readonly("m", &threshold_violation::m)
        .def_readonly("q", &threshold_violation::q);
    py::class_<threshold_report>(m, "ThresholdReport")
        .def_readonly("k_exp", &threshold_report::k_exp)
        .def_readonly("alpha", &threshold_report::alpha)
        .def_readonly("epsilon", &threshold_report::epsilon)
        .def_readonly("scan_bound", &threshold_report::scan_bound)
        .def_readonly("empirical_constant", &threshold_report::empirical_constant)
        .def_readonly("violations", &threshold_report::violations)
        .def_readonly("constructive_bound", &threshold_report::constructive_bound);

    m.def("least_prime_in_ap", &least_prime_in_ap, py::arg("cls"), py::arg("bound"));
    m.def("find_least_prime", &find_least_prime, py::arg("cls"));
    m.def("p_max", &p_max, py::arg("k"), py::arg("hard_cap") = kLeastPrimeHardCap);
    m.def("kanold_check", &kanold_check, py::arg("k"));
    m.def("kanold_scan", &kanold_scan, py::arg("k_from"), py::arg("k_to"));
    m.def("chowla_check", &chowla_check, py::arg("k"));
    m.def("chowla_exponent_scan", &chowla_exponent_scan, py::arg("k_from"), py::arg("k_to"));
    m.def("least_coprime_prime", &least_coprime_prime, py::arg("m"));
    m.def("least_ap_coprime_prime", &least_ap_coprime_prime, py::arg("cls"), py::arg("m"),
          py::arg("bound"));
    m.def("lemma2_min_constant", &lemma2_min_constant, py::arg("k_exp"), py::arg("scan_bound"));
    m.def("posa_threshold", &posa_threshold, py::arg("k_exp"), py::arg("cls"),
          py::arg("n_bound"));
    m.def("qpow_threshold_scan", &qpow_threshold_scan, py::arg("k_exp"), py::arg("alpha"),
          py::arg("epsilon"), py::arg("cls"), py::arg("n_bound"));
    m.def("euclid_generate", &euclid_generate, py::arg("count"));

    py::class_<coprime_scan_report::entry>(m, "CoprimeScanEntry")
        .def_readonly("a", &coprime_scan_report::entry::a)
        .def_readonly("witness", &coprime_scan_report::entry::witness);
    py::class_<coprime_scan_report>(m, "CoprimeScanReport")
        .def_readonly("per_a", &coprime_scan_report::per_a)
        .def_readonly("violations", &coprime_scan_report::violations)
        .def_readonly("below_15_ok", &coprime_scan_report::below_15_ok)
        .def_readonly("from_15_ok", &coprime_scan_report::from_15_ok);
    m.def("coprime_existence_scan", &coprime_existence_scan, py::arg("a_bound"));

    // Goldbach
    py::class_<goldbach_witness>(m, "GoldbachWitness")
        .def_readonly("target", &goldbach_witness::target)
        .def_readonly("p", &goldbach_witness::p)
        .def_readonly("q", &goldbach_witness::q)
        .def_readonly("cls", &goldbach_witness::cls)
        .def("__repr__", [](const goldbach_witness& w) {
            return std::to_string(w.target) + "=" + std::to_string(w.p) + "+" +
                   std::to_string(w.q);
        });
    py::enum_<gb_mode>(m, "GbMode").value("first", gb_mode::first).value("all", gb_mode::all);
    m.def("goldbach_decompositions", &goldbach_decompositions, py::arg("target"),
          py::arg("mode") = gb_mode::all);
    m.def("ap_goldbach_target", &ap_goldbach_target, py::arg("cls"), py::arg("w"));
    m.def("ap_goldbach_decompositions", &ap_goldbach_decompositions, py::arg("cls"),
          py::arg("w"), py::arg("mode") = gb_mode::all);
    m.def("validate_goldbach_witness", &validate_goldbach_witness, py::arg("witness"));

    py::class_<conj2_witness>(m, "Conj2Witness")
        .def_readonly("n", &conj2_witness::n)
        .def_readonly("p_r", &conj2_witness::p_r)
        .def_readonly("difference", &conj2_witness::difference)
        .def_readonly("fast_path", &conj2_witness::fast_path);
    m.def(
        "conjecture2_witness", [](u64 n) { return conjecture2_witness(n); }, py::arg("n"));
    m.def("conj2_slow_verify", &conj2_slow_verify, py::arg("n"), py::arg("p_r"));

    py::class_<conj2_record>(m, "Conj2Record")
        .def_readonly("n", &conj2_record::n)
        .def_readonly("p_r", &conj2_record::p_r)
        .def_readonly("difference", &conj2_record::difference)
        .def_readonly("fast_path", &conj2_record::fast_path)
        .def_readonly("verdict", &conj2_record::v);
    py::class_<conj2_scan_report>(m, "Conj2ScanReport")
        .def_readonly("records", &conj2_scan_report::records)
        .def_readonly("fast_hits", &conj2_scan_report::fast_hits)
        .def_readonly("counterexamples", &conj2_scan_report::counterexamples);
    m.def("conjecture2_scan", &conjecture2_scan, py::arg("n_from"), py::arg("n_to"));

    py::enum_<conj3_status>(m, "Conj3Status")
        .value("witness", conj3_status::witness)
        .value("no_witness", conj3_status::no_witness)
        .value("degenerate", conj3_status::degenerate);
    py::class_<conj3_witness>(m, "Conj3Witness")
        .def_readonly("n", &conj3_witness::n)
        .def_readonly("q_r", &conj3_witness::q_r)
        .def_readonly("index_r", &conj3_witness::index_r)
        .def_readonly("difference", &conj3_witness::difference);
    py::class_<conj3_result>(m, "Conj3Result")
        .def_readonly("status", &conj3_result::status)
        .def_readonly("witness", &conj3_result::w);
    m.def("conjecture3_witness", &conjecture3_witness, py::arg("cls"), py::arg("n"));

    m.def("lemma1_witness", &lemma1_witness, py::arg("n"));
    m.def("lemma7_witness", &lemma7_witness, py::arg("cls"), py::arg("p"), py::arg("n"));

    py::class_<bertrand_record>(m, "BertrandRecord")
        .def_readonly("x", &bertrand_record::x)
        .def_readonly("g", &bertrand_record::g)
        .def_readonly("prime", &bertrand_record::prime)
        .def_readonly("verdict", &bertrand_record::v);
    m.def("bertrand_ap_check_one", &bertrand_ap_check_one, py::arg("cls"), py::arg("x"));
    m.def("bertrand_ap_check", &bertrand_ap_check, py::arg("cls"), py::arg("x_from"),
          py::arg("x_to"));

    // linear systems
    py::class_<admissible_verdict>(m, "AdmissibleVerdict")
        .def_readonly("admissible", &admissible_verdict::admissible)
        .def_readonly("blocking_prime", &admissible_verdict::blocking_prime)
        .def_readonly("degenerate_index", &admissible_verdict::degenerate_index);
    m.def(
        "admissible_check",
        [](const std::vector<std::pair<u64, u64>>& forms) {
            return admissible_check(system_from(forms));
        },
        py::arg("forms"));

    py::enum_<f1f2_result::status>(m, "F1F2Status")
        .value("found", f1f2_result::status::found)
        .value("exhausted", f1f2_result::status::exhausted)
        .value("width_exceeded", f1f2_result::status::width_exceeded);
    py::class_<f1f2_result>(m, "F1F2Result")
        .def_readonly("status", &f1f2_result::st)
        .def_readonly("permutation", &f1f2_result::permutation)
        .def_readonly("phi", &f1f2_result::phi);
    m.def("f1f2_search", &f1f2_search, py::arg("n"), py::arg("width_cap") = 12);

    py::class_<matrix_report>(m, "MatrixReport")
        .def_readonly("n", &matrix_report::n)
        .def_readonly("phi", &matrix_report::phi)
        .def_property_readonly("rows_ok",
                               [](const matrix_report& r) {
                                   return std::vector<bool>(r.rows_ok.begin(), r.rows_ok.end());
                               })
        .def_property_readonly("cols_ok",
                               [](const matrix_report& r) {
                                   return std::vector<bool>(r.cols_ok.begin(), r.cols_ok.end());
                               })
        .def_readonly("row_witness", &matrix_report::row_witness)
        .def_readonly("col_witness", &matrix_report::col_witness)
        .def("all_ok", &matrix_report::all_ok);
    m.def("matrix_prime_check", &matrix_prime_check, py::arg("n"));

    py::class_<conj4_record>(m, "Conj4Record")
        .def_readonly("d", &conj4_record::d)
        .def_readonly("a", &conj4_record::a)
        .def_readonly("epsilon", &conj4_record::epsilon)
        .def_readonly("merged", &conj4_record::merged)
        .def_readonly("q", &conj4_record::q)
        .def_readonly("bound", &conj4_record::bound)
        .def_readonly("within_bound", &conj4_record::within_bound)
        .def_readonly("verdict", &conj4_record::v);
    m.def("conjecture4_least_prime", &conjecture4_least_prime, py::arg("cls"), py::arg("d"),
          py::arg("a"), py::arg("epsilon"), py::arg("cap_multiplier") = 8);

    m.def(
        "standard_prime_map_check",
        [](const std::vector<std::pair<u64, u64>>& forms) {
            return standard_prime_map_check(system_from(forms));
        },
        py::arg("forms"));
    m.def("bertrand_witness_b", &bertrand_witness_b, py::arg("a"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
