#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spclass/catalog.hpp"
#include "spclass/diophantine.hpp"
#include "spclass/driver.hpp"
#include "spclass/io.hpp"
#include "spclass/projection.hpp"

namespace py = pybind11;
using namespace spc;

namespace {

QVector qvec_from(const std::vector<std::string>& entries) {
    std::vector<Rat> e;
    for (const std::string& s : entries) e.push_back(parse_rational(s));
    return QVector(std::move(e));
}

std::string py_j_shifted(const std::vector<std::string>& v, const std::vector<std::string>& w,
                         const std::vector<long>& dims) {
    DimVector d(dims);
    return to_string(j_shifted(qvec_from(v), qvec_from(w), d));
}

std::string py_wdw_form(const std::vector<std::string>& p, const std::vector<std::string>& q,
                        const std::vector<long>& dims) {
    DimVector d(dims);
    return to_string(wdw_form(qvec_from(p), qvec_from(q), d));
}

bool py_is_null(const std::vector<std::string>& c, const std::vector<long>& dims) {
    return is_null(qvec_from(c), DimVector(dims));
}

std::string py_classify(const std::string& instance_json) {
    WeightSystem ws = parse_instance_text(instance_json);
    return verdict_to_json(classify_instance(ws));
}

std::vector<std::pair<std::string, std::string>> py_validate(const std::string& instance_json) {
    WeightSystem ws = parse_instance_text(instance_json);
    std::vector<std::pair<std::string, std::string>> out;
    for (const Violation& v : validate(ws)) out.push_back({v.code, v.message});
    return out;
}

std::string py_fano_instance(const std::vector<long>& d_rest) {
    return instance_to_json(fano_system(d_rest));
}

std::string py_classify_weight(const std::vector<int>& entries) {
    Weight w = classify_weight(entries);
    return w.type == WType::I ? "I" : w.type == WType::II ? "II" : "III";
}

std::vector<std::vector<long>> py_solve_dimensions(const std::string& tag, long bound) {
    return solve_fracsystem(constraints_for(tag), bound).solutions;
}

std::vector<std::string> py_catalog_tags() {
    std::vector<std::string> out;
    for (const FaceShape& s : catalog()) out.push_back(s.tag);
    return out;
}

}  // namespace

PYBIND11_MODULE(_spclass, m) {
    m.doc() = "superpotential existence classifier for cohomogeneity-one weight systems";
    m.def("j_shifted", &py_j_shifted, py::arg("v"), py::arg("w"), py::arg("d"),
          "shifted kinetic form 1 - sum v_i w_i / d_i, exact rational as a string");
    m.def("wdw_form", &py_wdw_form, py::arg("p"), py::arg("q"), py::arg("d"),
          "the Lorentz-signature kinetic form, exact rational as a string");
    m.def("is_null", &py_is_null, py::arg("c"), py::arg("d"));
    m.def("classify_weight", &py_classify_weight, py::arg("entries"),
          "weight type tag: I, II or III");
    m.def("classify", &py_classify, py::arg("instance_json"),
          "full classification pipeline; returns the report as JSON");
    m.def("validate", &py_validate, py::arg("instance_json"),
          "structural violations as (code, message) pairs");
    m.def("fano_instance", &py_fano_instance, py::arg("d_rest"),
          "circle-bundle weight system as instance JSON");
    m.def("solve_dimensions", &py_solve_dimensions, py::arg("tag"), py::arg("bound") = 64,
          "integer dimension vectors admitting a catalog triangle");
    m.def("catalog_tags", &py_catalog_tags, "tags of the 2-face catalog");
}
