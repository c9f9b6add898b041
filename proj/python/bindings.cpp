#include "phonokey/index.hpp"
#include "phonokey/medicine.hpp"
#include "phonokey/reports.hpp"
#include "phonokey/surname.hpp"
#include "phonokey/textnorm.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace phonokey;

namespace {

Mode mode_arg(const std::string& name) {
    auto mode = parse_mode(name);
    if (!mode)
        throw py::value_error("ruleset must be 'surname' or 'medicine', got '" + name + "'");
    return *mode;
}

index::Rank rank_arg(const std::string& name) {
    auto rank = index::parse_rank(name);
    if (!rank)
        throw py::value_error("rank must be 'none' or 'edit-distance', got '" + name + "'");
    return *rank;
}

py::dict to_dict(const reports::OptimizationReport& r) {
    py::dict d;
    d["n_num"] = r.n_num;
    d["i_num"] = r.i_num;
    d["n_vol"] = r.n_vol;
    d["i_vol"] = r.i_vol;
    d["k_num"] = r.k_num;
    d["k_vol"] = r.k_vol;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Phonetic keys and inverted indexes for Ukrainian surnames and medicine titles";

    py::register_exception<textnorm::CleanError>(m, "CleanError", PyExc_ValueError);
    py::register_exception<reports::DegenerateInput>(m, "DegenerateInput", PyExc_ValueError);
    py::register_exception<index::IndexFormatError>(m, "IndexFormatError", PyExc_ValueError);

    m.def("clean_surname", [](const std::string& raw) {
        auto token = textnorm::clean_surname(raw);
        return py::make_tuple(token.text(), token.hyphenated());
    }, py::arg("raw"), "Cleaned surname and whether it is hyphenated; raises CleanError.");

    m.def("clean_medicine", [](const std::string& raw) {
        std::vector<std::string> out;
        for (const auto& token : textnorm::clean_medicine(raw))
            out.push_back(token.text());
        return out;
    }, py::arg("raw"));

    m.def("fold_homoglyphs", py::overload_cast<std::string_view>(&textnorm::fold_homoglyphs), py::arg("text"));

    m.def("surname_key", [](const std::string& raw) {
        return surname::key(textnorm::clean_surname(raw)).text();
    }, py::arg("raw"));

    m.def("surname_key_trace", [](const std::string& raw) {
        auto keyed = surname::key_with_trace(textnorm::clean_surname(raw));
        py::list steps;
        for (const auto& s : keyed.trace)
            steps.append(py::make_tuple(s.step, s.before, s.after));
        return py::make_tuple(keyed.key.text(), steps);
    }, py::arg("raw"), "(key, [(step, before, after), ...])");

    m.def("medicine_keys", [](const std::string& title) {
        std::vector<std::string> out;
        for (const auto& k : medicine::keys(title))
            out.push_back(k.text());
        return out;
    }, py::arg("title"));

    m.def("edit_distance", py::overload_cast<std::string_view, std::string_view>(&index::edit_distance),
          py::arg("a"), py::arg("b"));

    m.def("optimization_coefficient", &reports::optimization_coefficient, py::arg("index"), py::arg("full"));
    m.def("format_percent", &reports::format_percent, py::arg("value"));

    py::class_<index::PhoneticIndex>(m, "Index")
        .def_static("build", [](const std::vector<std::string>& records, const std::string& ruleset,
                                unsigned threads) {
            index::BuildResult built;
            {
                py::gil_scoped_release release;
                built = index::build(records, mode_arg(ruleset), threads);
            }
            std::vector<std::pair<std::size_t, std::string>> rejects;
            for (const auto& r : built.rejects)
                rejects.emplace_back(r.line, r.reason);
            return py::make_tuple(std::move(built.index), rejects);
        }, py::arg("records"), py::arg("ruleset"), py::arg("threads") = 1,
           "(index, [(line, reason), ...])")
        .def_static("parse", &index::PhoneticIndex::parse, py::arg("text"))
        .def("serialize", &index::PhoneticIndex::serialize)
        .def_property_readonly("ruleset", [](const index::PhoneticIndex& i) { return std::string(i.ruleset()); })
        .def_property_readonly("records", &index::PhoneticIndex::records)
        .def_property_readonly("distinct_keys", &index::PhoneticIndex::distinct_keys)
        .def_property_readonly("distinct_forms", &index::PhoneticIndex::distinct_forms)
        .def("bucket", [](const index::PhoneticIndex& i, const std::string& key) {
            std::vector<std::pair<std::string, std::uint64_t>> out;
            if (const auto* bucket = i.find(key))
                for (const auto& [form, count] : *bucket)
                    out.emplace_back(form, count);
            return out;
        }, py::arg("key"))
        .def("lookup", [](const index::PhoneticIndex& i, const std::string& query, const std::string& rank) {
            auto result = index::lookup(i, query, rank_arg(rank));
            py::list hits;
            for (const auto& h : result.hits)
                hits.append(py::make_tuple(h.form, h.count, h.distance ? py::cast(*h.distance) : py::none()));
            return hits;
        }, py::arg("query"), py::arg("rank") = "none", "[(form, count, distance or None), ...]")
        .def("dedup", [](const index::PhoneticIndex& i) {
            py::list groups;
            for (const auto& g : index::dedup(i)) {
                py::list members;
                for (const auto& p : g.members)
                    members.append(py::make_tuple(p.form, p.count));
                groups.append(py::make_tuple(g.key, g.total, members));
            }
            return groups;
        })
        .def("optimization", [](const index::PhoneticIndex& i) {
            const auto r = reports::optimization_report(i);
            py::dict d;
            d["structured"] = to_dict(r.structured);
            d["full"] = to_dict(r.full);
            return d;
        })
        .def("__len__", &index::PhoneticIndex::distinct_keys)
        .def("__eq__", [](const index::PhoneticIndex& a, const index::PhoneticIndex& b) { return a == b; });
}
