#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "gwcubic/cubic_oracle.hpp"
#include "gwcubic/enumerate.hpp"
#include "gwcubic/errors.hpp"
#include "gwcubic/invariant_engine.hpp"
#include "gwcubic/kontsevich.hpp"
#include "gwcubic/selftest.hpp"

namespace py = pybind11;
using namespace gwcubic;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(r.numerator().get_str())),
                    py::int_(py::str(r.denominator().get_str())));
}

py::int_ to_int(const Integer& n) { return py::int_(py::str(n.get_str())); }

ContactSeq seq_from_list(const std::vector<int>& entries) {
    return ContactSeq(std::vector<int>(entries));
}

py::dict count_to_dict(int d, const ContactSeq& alpha, const ContactSeq& beta,
                       const CountResult& r) {
    py::dict out;
    out["d"] = d;
    out["alpha"] = alpha.str();
    out["beta"] = beta.str();
    out["N"] = r.enumerative ? to_fraction(*r.n_value) : py::object(py::none());
    out["I"] = to_fraction(r.i_value);
    out["enumerative"] = r.enumerative;
    return out;
}

}  // namespace

PYBIND11_MODULE(_gwcubic, m) {
    m.doc() = "Exact counts of rational plane curves with prescribed contacts to a smooth cubic";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

    py::class_<InvariantEngine>(m, "Engine")
        .def(py::init<>())
        .def(
            "invariant",
            [](InvariantEngine& self, int d, const std::vector<int>& alpha,
               const std::vector<int>& beta) {
                return to_fraction(self.invariant(d, seq_from_list(alpha), seq_from_list(beta)));
            },
            py::arg("d"), py::arg("alpha"), py::arg("beta"),
            "Twisted invariant I_d(alpha, beta); 0 when undefined")
        .def(
            "count",
            [](InvariantEngine& self, int d, const std::vector<int>& alpha,
               const std::vector<int>& beta) {
                ContactSeq a = seq_from_list(alpha), b = seq_from_list(beta);
                return count_to_dict(d, a, b, self.enumerative_count(d, a, b));
            },
            py::arg("d"), py::arg("alpha"), py::arg("beta"),
            "Enumerative count N_d(alpha, beta) together with the invariant")
        .def(
            "m_value",
            [](InvariantEngine& self, int d, const std::vector<int>& gamma) {
                return to_fraction(self.m_value(d, seq_from_list(gamma)));
            },
            py::arg("d"), py::arg("gamma"))
        .def(
            "table",
            [](InvariantEngine& self, int d, int jobs) {
                py::list rows;
                for (const auto& row : full_table(self, d, jobs)) {
                    rows.append(count_to_dict(d, row.alpha, row.beta, row.result));
                }
                return rows;
            },
            py::arg("d"), py::arg("jobs") = 1)
        .def(
            "selftest",
            [](InvariantEngine& self, int max_d, std::uint64_t seed) {
                py::list items;
                for (const auto& item : run_selftests(self, max_d, seed).items) {
                    py::dict entry;
                    entry["name"] = item.name;
                    entry["pass"] = item.pass;
                    entry["checked"] = item.checked;
                    entry["detail"] = item.detail;
                    items.append(entry);
                }
                return items;
            },
            py::arg("max_d") = 1, py::arg("seed") = kOracleDefaultSeed)
        .def("cache_size", [](const InvariantEngine& self) { return self.table().size(); })
        .def("clear_cache", [](InvariantEngine& self) { self.table().clear(); })
        .def("save_cache",
             [](const InvariantEngine& self, const std::string& path) {
                 self.table().save_file(path);
             })
        .def("load_cache", [](InvariantEngine& self, const std::string& path) {
            self.table().load_file(path);
        });

    m.def(
        "kontsevich_number", [](int d) { return to_int(kontsevich_number(d)); }, py::arg("d"),
        "Rational degree-d plane curves through 3d-1 general points");

    m.def(
        "flex_count",
        [](std::uint64_t seed) { return flex_count(CubicForm::default_cubic(), seed); },
        py::arg("seed") = kOracleDefaultSeed, "Flexes of the default smooth cubic");
    m.def(
        "tangent_count",
        [](bool on_curve, std::uint64_t seed) {
            CubicForm cubic = CubicForm::default_cubic();
            ProjPoint p = on_curve ? default_on_curve_point() : sample_point_off_curve(cubic, seed);
            return tangent_count_from_point(cubic, p, seed);
        },
        py::arg("on_curve") = false, py::arg("seed") = kOracleDefaultSeed,
        "Tangent lines to the default cubic through a sampled (or on-curve) point");
}
