#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdseq/gaps.hpp"
#include "pdseq/kernel.hpp"
#include "pdseq/oracle.hpp"
#include "pdseq/prefix_structure.hpp"
#include "pdseq/verify.hpp"

namespace py = pybind11;
using namespace pdseq;

namespace {

// Words cross the boundary in their text form ("-" is the empty word).
std::string text(const Word& w) { return w.to_text(); }

Word parse(unsigned k, const std::string& s) { return Word::from_text(s, Alphabet(k)); }

Conventions conventions(bool paper_literal) {
    return paper_literal ? Conventions::paper_literal() : Conventions{};
}

py::dict report_dict(const Report& r) {
    py::dict params;
    for (const auto& [name, value] : r.params) params[py::str(name)] = value;
    py::dict d;
    d["check"] = r.check;
    d["params"] = params;
    d["status"] = std::string(to_string(r.status));
    d["documented"] = r.documented;
    d["mismatch_position"] = r.mismatch_position ? py::cast(*r.mismatch_position) : py::none();
    d["counterexample"] = r.counterexample ? py::cast(*r.counterexample) : py::none();
    d["detail"] = r.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_pdseq, m) {
    m.doc() = "Generalized period-doubling sequences P_k";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_MemoryError);
    py::register_exception<FalsificationError>(m, "FalsificationError", PyExc_AssertionError);

    m.def("substitute", [](unsigned k, const std::string& w) { return text(substitute(parse(k, w))); },
          py::arg("k"), py::arg("word"));
    m.def("mirror_substitute", [](unsigned k, const std::string& w) { return text(mirror_substitute(parse(k, w))); },
          py::arg("k"), py::arg("word"));
    m.def("iterate", [](unsigned k, unsigned n) { return text(iterate(Alphabet(k), n)); }, py::arg("k"), py::arg("n"),
          "W_n = s_k^n(0)");
    m.def("prefix", [](unsigned k, std::size_t length) { return text(sequence_prefix(Alphabet(k), length)); },
          py::arg("k"), py::arg("length"));
    m.def("letter_at", [](unsigned k, std::uint64_t i) { return static_cast<unsigned>(letter_at(Alphabet(k), i)); },
          py::arg("k"), py::arg("index"), "0-based random access into P_k");
    m.def("palindromic_prefix", [](unsigned k, unsigned n) { return text(palindromic_prefix(Alphabet(k), n)); },
          py::arg("k"), py::arg("n"));

    m.def("kernel_numbers", [](unsigned k, unsigned i_max) { return kernel_numbers(Alphabet(k), i_max); },
          py::arg("k"), py::arg("i_max"));
    m.def(
        "kernel_word",
        [](unsigned k, unsigned i, bool paper_literal) {
            return text(kernel_word(Alphabet(k), i, conventions(paper_literal).kernel));
        },
        py::arg("k"), py::arg("i"), py::arg("paper_literal") = false);
    m.def(
        "kernel_gap",
        [](unsigned k, unsigned n, bool paper_literal) {
            return text(kernel_gap(Alphabet(k), n, conventions(paper_literal).gaps));
        },
        py::arg("k"), py::arg("n"), py::arg("paper_literal") = false);
    m.def(
        "kernel_gap_lengths",
        [](unsigned k, unsigned n_max, bool paper_literal) {
            return kernel_gap_lengths(Alphabet(k), n_max, conventions(paper_literal).gaps);
        },
        py::arg("k"), py::arg("n_max"), py::arg("paper_literal") = false);

    m.def(
        "factorize",
        [](unsigned k, std::size_t length, bool paper_literal) {
            std::vector<std::tuple<std::string, unsigned, std::uint64_t, std::string>> out;
            for (const auto& t : factorize(Alphabet(k), length, conventions(paper_literal))) {
                out.emplace_back(std::string(to_string(t.kind)), t.index, t.start, text(t.word));
            }
            return out;
        },
        py::arg("k"), py::arg("length"), py::arg("paper_literal") = false,
        "(kind, index, start, word) for every complete token inside the first `length` letters");

    m.def(
        "factor_gaps",
        [](unsigned k, const std::string& factor, unsigned depth) {
            FactorGaps fg = factor_gaps(parse(k, factor), depth);
            std::vector<std::tuple<std::size_t, std::string, std::string, std::string>> gaps;
            for (const Gap& g : fg.gaps) {
                gaps.emplace_back(g.index, std::string(to_string(g.kind)), std::string(to_string(g.orientation)),
                                  text(g.word));
            }
            std::vector<std::size_t> starts;
            for (const auto& o : fg.occurrences) starts.push_back(o.start);
            return py::make_tuple(text(fg.leading), starts, gaps);
        },
        py::arg("k"), py::arg("factor"), py::arg("depth"), "(G_0, occurrence starts, gaps)");

    m.def("congruence_check", [](unsigned k, std::size_t length) {
        return report_dict(oracle::congruence_check(Alphabet(k), length));
    }, py::arg("k"), py::arg("length"));

    m.def(
        "verify_all",
        [](unsigned k, unsigned depth, bool paper_literal) {
            VerifyOptions options;
            options.conventions = conventions(paper_literal);
            std::vector<Report> reports;
            {
                py::gil_scoped_release release;
                reports = verify_all(Alphabet(k), depth, options);
            }
            py::list out;
            for (const Report& r : reports) out.append(report_dict(r));
            return out;
        },
        py::arg("k"), py::arg("depth") = 12, py::arg("paper_literal") = false);
}
