// Python bindings for the local weight distribution library. Tallies cross
// the boundary as {weight: int} dicts (counts become Python ints, which are
// arbitrary precision on both sides); codewords as '0'/'1' strings;
// permutations as image lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lwd/codes.hpp"
#include "lwd/cosets.hpp"
#include "lwd/neighbors.hpp"
#include "lwd/relations.hpp"
#include "lwd/table2.hpp"

namespace py = pybind11;

namespace {

py::int_ count_to_int(const lwd::Count& c) {
    std::string s = c.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::dict tally_to_dict(const lwd::WeightTally& t) {
    py::dict d;
    for (const auto& [w, c] : t.entries()) d[py::int_(w)] = count_to_int(c);
    return d;
}

lwd::WeightTally tally_from_dict(const py::dict& d, std::size_t length) {
    lwd::WeightTally t(length);
    for (const auto& item : d) {
        unsigned w = item.first.cast<unsigned>();
        std::string c = py::str(item.second);
        t.set(w, lwd::Count(c));
    }
    return t;
}

lwd::SweepOptions make_options(bool shortcuts, unsigned threads, unsigned cap) {
    lwd::SweepOptions opts;
    opts.use_shortcuts = shortcuts;
    opts.threads = threads;
    opts.enumeration_cap = cap;
    return opts;
}

std::vector<lwd::Permutation> perms_from_lists(
    const std::vector<std::vector<std::uint32_t>>& images) {
    std::vector<lwd::Permutation> out;
    out.reserve(images.size());
    for (const auto& img : images) out.emplace_back(img);
    return out;
}

std::vector<std::vector<std::uint32_t>> perms_to_lists(
    const std::vector<lwd::Permutation>& perms) {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(perms.size());
    for (const auto& p : perms) out.push_back(p.mapping());
    return out;
}

py::list checks_to_list(const std::vector<lwd::RelationCheck>& checks) {
    py::list out;
    for (const auto& c : checks)
        out.append(py::make_tuple(c.name, c.pass, c.detail));
    return out;
}

}  // namespace

PYBIND11_MODULE(lwdlib, m) {
    m.doc() = "local weight distributions of binary linear codes";

    py::register_exception<lwd::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<lwd::PreconditionError>(m, "PreconditionError",
                                                   PyExc_ValueError);
    py::register_exception<lwd::CapError>(m, "CapError", PyExc_RuntimeError);
    py::register_exception<lwd::IdentityError>(m, "IdentityError", PyExc_ArithmeticError);

    py::enum_<lwd::DecompCategory>(m, "DecompCategory")
        .value("INDECOMPOSABLE", lwd::DecompCategory::Indecomposable)
        .value("DECOMPOSABLE_ODD_WEIGHT", lwd::DecompCategory::DecomposableOddWeight)
        .value("ONLY_ODD_DECOMPOSABLE", lwd::DecompCategory::OnlyOddDecomposable)
        .value("EVEN_DECOMPOSABLE", lwd::DecompCategory::EvenDecomposable);

    py::class_<lwd::LinearCode>(m, "LinearCode")
        .def_property_readonly("n", &lwd::LinearCode::length)
        .def_property_readonly("k", &lwd::LinearCode::dimension)
        .def_property_readonly("rows",
                               [](const lwd::LinearCode& c) {
                                   std::vector<std::string> rows;
                                   for (std::size_t i = 0; i < c.dimension(); ++i)
                                       rows.push_back(c.generator().row(i).to_string());
                                   return rows;
                               })
        .def("contains",
             [](const lwd::LinearCode& c, const std::string& bits) {
                 return c.contains(lwd::BitVector::from_string(bits));
             })
        .def("__repr__", [](const lwd::LinearCode& c) {
            return "<LinearCode (" + std::to_string(c.length()) + "," +
                   std::to_string(c.dimension()) + ")>";
        });

    m.def("from_rows", [](const std::vector<std::string>& rows) {
        return lwd::LinearCode(lwd::BinaryMatrix::from_rows(rows));
    });
    m.def("hamming", &lwd::hamming, py::arg("r"));
    m.def("reed_muller", &lwd::reed_muller, py::arg("r"), py::arg("m"));
    m.def("bch", &lwd::bch, py::arg("m"), py::arg("designed_distance"));
    m.def("extend", &lwd::extend);
    m.def("puncture", &lwd::puncture, py::arg("code"), py::arg("pos"));
    m.def("even_subcode", &lwd::even_subcode);
    m.def("random_linear_code", &lwd::random_linear_code, py::arg("n"), py::arg("k"),
          py::arg("seed"));

    m.def(
        "is_zero_neighbor",
        [](const lwd::LinearCode& c, const std::string& bits) {
            return lwd::is_zero_neighbor(c, lwd::BitVector::from_string(bits));
        },
        py::arg("code"), py::arg("word"));
    m.def(
        "classify",
        [](const lwd::LinearCode& c, const std::string& bits) {
            return lwd::classify(c, lwd::BitVector::from_string(bits));
        },
        py::arg("code"), py::arg("word"));

    m.def(
        "weight_distribution",
        [](const lwd::LinearCode& c, bool shortcuts, unsigned threads, unsigned cap) {
            return tally_to_dict(
                lwd::weight_distribution(c, make_options(shortcuts, threads, cap)));
        },
        py::arg("code"), py::arg("shortcuts") = true, py::arg("threads") = 1,
        py::arg("cap") = lwd::kDefaultEnumerationCap);
    m.def(
        "local_weight_distribution",
        [](const lwd::LinearCode& c, bool shortcuts, unsigned threads, unsigned cap) {
            return tally_to_dict(
                lwd::local_weight_distribution(c, make_options(shortcuts, threads, cap)));
        },
        py::arg("code"), py::arg("shortcuts") = true, py::arg("threads") = 1,
        py::arg("cap") = lwd::kDefaultEnumerationCap);
    m.def(
        "only_odd_counts",
        [](const lwd::LinearCode& c, bool shortcuts, unsigned threads, unsigned cap) {
            return tally_to_dict(
                lwd::only_odd_counts(c, make_options(shortcuts, threads, cap)));
        },
        py::arg("code"), py::arg("shortcuts") = true, py::arg("threads") = 1,
        py::arg("cap") = lwd::kDefaultEnumerationCap);
    m.def(
        "minimum_distance",
        [](const lwd::LinearCode& c) { return lwd::minimum_distance(c); },
        py::arg("code"));

    m.def(
        "extend_lwd",
        [](const py::dict& l, const py::dict& n, std::size_t length) {
            return tally_to_dict(
                lwd::extend_lwd(tally_from_dict(l, length), tally_from_dict(n, length)));
        },
        py::arg("L"), py::arg("N"), py::arg("n"));
    m.def(
        "even_subcode_lwd",
        [](const py::dict& l, const py::dict& n, std::size_t length) {
            return tally_to_dict(lwd::even_subcode_lwd(tally_from_dict(l, length),
                                                       tally_from_dict(n, length)));
        },
        py::arg("L"), py::arg("N"), py::arg("n"));
    m.def(
        "parity_split",
        [](const py::dict& l_ex, std::size_t length_ex) {
            auto [ones, zeros] = lwd::parity_split(tally_from_dict(l_ex, length_ex));
            return py::make_tuple(tally_to_dict(ones), tally_to_dict(zeros));
        },
        py::arg("L_ex"), py::arg("n_ex"));
    m.def(
        "puncture_lwd_transitive",
        [](const py::dict& l_ex, const py::dict& n, std::size_t length_ex) {
            return tally_to_dict(lwd::puncture_lwd_transitive(
                tally_from_dict(l_ex, length_ex), tally_from_dict(n, length_ex - 1)));
        },
        py::arg("L_ex"), py::arg("N"), py::arg("n_ex"));
    m.def(
        "weights_multiple_of_four",
        [](const py::dict& a, std::size_t length) {
            return lwd::weights_multiple_of_four(tally_from_dict(a, length));
        },
        py::arg("A"), py::arg("n"));
    m.def(
        "table_ratio_check",
        [](const py::dict& l, std::size_t length) {
            return checks_to_list(
                lwd::table_ratio_check(tally_from_dict(l, length), length).checks);
        },
        py::arg("L"), py::arg("n"));
    m.def(
        "verify_all_relations",
        [](const lwd::LinearCode& c) {
            return checks_to_list(lwd::verify_all_relations(c).checks);
        },
        py::arg("code"));

    m.def("table2", []() {
        py::dict out;
        for (const auto& col : lwd::table2_columns())
            out[py::str(col.id)] =
                py::make_tuple(col.n, col.k, tally_to_dict(col.lwd));
        return out;
    });

    m.def("cyclic_shift",
          [](std::size_t n) { return lwd::cyclic_shift(n).mapping(); });
    m.def("affine_group_generators", [](unsigned m) {
        return perms_to_lists(lwd::affine_group_generators(m));
    });
    m.def(
        "group_sample",
        [](const std::vector<std::vector<std::uint32_t>>& gens, std::size_t count) {
            return perms_to_lists(lwd::group_sample(perms_from_lists(gens), count));
        },
        py::arg("generators"), py::arg("count"));
    m.def(
        "is_automorphism",
        [](const std::vector<std::uint32_t>& image, const lwd::LinearCode& c) {
            return lwd::is_automorphism(lwd::Permutation(image), c);
        },
        py::arg("perm"), py::arg("code"));
    m.def(
        "apply_permutation",
        [](const std::vector<std::uint32_t>& image, const std::string& bits) {
            return lwd::apply(lwd::Permutation(image), lwd::BitVector::from_string(bits))
                .to_string();
        },
        py::arg("perm"), py::arg("word"));
    m.def(
        "lwd_via_cosets",
        [](const lwd::LinearCode& c, const lwd::LinearCode& sub,
           const std::vector<std::vector<std::uint32_t>>& gens, unsigned threads) {
            lwd::SweepOptions opts;
            opts.threads = threads;
            return tally_to_dict(
                lwd::lwd_via_cosets(c, sub, perms_from_lists(gens), opts));
        },
        py::arg("code"), py::arg("subcode"), py::arg("generators"),
        py::arg("threads") = 1);
}
