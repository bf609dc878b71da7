#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "pdseq/gaps.hpp"
#include "pdseq/kernel.hpp"
#include "pdseq/oracle.hpp"
#include "pdseq/prefix_structure.hpp"
#include "pdseq/verify.hpp"

namespace pdseq::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct RunConfig {
    unsigned k = 3;
    std::optional<std::size_t> length;
    std::optional<unsigned> level;
    std::optional<unsigned> up_to;
    std::optional<std::size_t> cap;
    std::optional<unsigned> depth;
    std::string which;
    std::string factor;
    bool json = false;
    bool csv = false;
    bool strict = false;
    bool paper_literal = false;
    std::string gap_rule;
    bool timing = false;

    Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }

    std::size_t length_cap() const { return cap.value_or(length_cap_from_env()); }

    Conventions conventions() const {
        Conventions c = paper_literal ? Conventions::paper_literal() : Conventions{};
        if (gap_rule == "canonical") c.gaps = GapRule::Canonical;
        if (gap_rule == "shifted") c.gaps = GapRule::Shifted;
        if (gap_rule == "paper-literal") c.gaps = GapRule::PaperLiteral;
        return c;
    }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json letters(const Word& w) {
    json a = json::array();
    for (Letter x : w.letters()) a.push_back(static_cast<unsigned>(x));
    return a;
}

json conventions_json(const Conventions& c) {
    return {{"kernel", c.kernel == KernelRule::Canonical ? "canonical" : "paper-literal"},
            {"gaps", std::string(to_string(c.gaps))},
            {"literal_slices", c.literal_slices}};
}

// -- tables ----------------------------------------------------------------------

struct Cell {
    std::string text;
    json value;
};

Cell cell(std::uint64_t v) { return {std::to_string(v), v}; }
Cell cell(const Word& w) { return {w.to_text(), letters(w)}; }
Cell cell(bool b) { return {b ? "yes" : "no", b}; }
Cell cell(std::optional<std::size_t> v) { return v ? cell(std::uint64_t{*v}) : Cell{"-", nullptr}; }

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void print_table(const Table& t, Format format, const json& meta, std::ostream& out) {
    if (format == Format::Json) {
        json doc = meta;
        json rows = json::array();
        for (const auto& row : t.rows) {
            json rec = json::object();
            for (std::size_t c = 0; c < t.columns.size(); ++c) rec[t.columns[c]] = row[c].value;
            rows.push_back(std::move(rec));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << "\n";
        return;
    }
    if (format == Format::Csv) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_escape(t.columns[c]);
        out << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(row[c].text);
            out << "\n";
        }
        return;
    }
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].text.size());
    }
    auto line = [&](auto&& text_of) {
        std::string s;
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            std::string field = text_of(c);
            if (c + 1 < t.columns.size()) field.resize(width[c], ' ');
            s += field;
            if (c + 1 < t.columns.size()) s += "  ";
        }
        out << s << "\n";
    };
    line([&](std::size_t c) { return t.columns[c]; });
    for (const auto& row : t.rows) line([&](std::size_t c) { return row[c].text; });
}

// -- commands ------------------------------------------------------------------------

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.length.has_value() == cfg.level.has_value()) {
        throw UsageError("generate needs exactly one of --length or --level");
    }
    if (cfg.csv) throw UsageError("--csv is not available for generate");
    const Alphabet a(cfg.k);
    const std::size_t cap = cfg.length_cap();
    Word w = cfg.length ? sequence_prefix(a, *cfg.length, cap) : iterate(a, *cfg.level, cap);
    if (cfg.json) {
        json doc{{"k", cfg.k}};
        if (cfg.length) doc["length"] = *cfg.length;
        if (cfg.level) doc["level"] = *cfg.level;
        doc["word"] = letters(w);
        out << doc.dump() << "\n";
    } else {
        out << w.to_text() << "\n";
    }
    return kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.up_to) throw UsageError("table needs --up-to");
    const Alphabet a(cfg.k);
    const std::size_t cap = cfg.length_cap();
    const unsigned up_to = *cfg.up_to;
    const Conventions conv = cfg.conventions();
    Table t;
    json meta{{"k", cfg.k}, {"which", cfg.which}, {"up_to", up_to}};

    if (cfg.which == "w") {
        PrefixFamily family = PrefixFamily::build(a, up_to, cap);
        t.columns = {"n", "theta_n", "w_n", "W_n", "p_n"};
        for (const PrefixEntry& e : family.entries()) {
            t.rows.push_back({cell(std::uint64_t{e.n}), cell(std::uint64_t{e.theta}), cell(e.length), cell(e.W), cell(e.p)});
        }
    } else if (cfg.which == "r") {
        std::vector<std::uint64_t> r = kernel_numbers(a, up_to);
        t.columns = {"i", "r_i"};
        for (unsigned i = 0; i <= up_to; ++i) t.rows.push_back({cell(std::uint64_t{i}), cell(r[i])});
    } else if (cfg.which == "kernel") {
        unsigned e = std::min(up_to + 4, 62u);
        while (e > 0 && (std::size_t{1} << e) > cap) --e;
        KernelTable table = KernelTable::build(a, up_to, conv.kernel, e, cap);
        meta["conventions"] = conventions_json(conv);
        meta["search_prefix_length"] = std::uint64_t{1} << e;
        t.columns = {"i", "r_i", "R_i", "is_palindrome", "first_occurrence"};
        for (const KernelEntry& row : table.rows()) {
            t.rows.push_back({cell(std::uint64_t{row.index}), cell(row.number), cell(row.word), cell(row.palindrome),
                              cell(row.first_occurrence)});
        }
    } else if (cfg.which == "g") {
        if (up_to < 1) throw UsageError("g is tabulated from n = 1");
        std::vector<std::uint64_t> g = kernel_gap_lengths(a, up_to, conv.gaps);
        meta["conventions"] = conventions_json(conv);
        t.columns = {"n", "g_n"};
        for (unsigned n = 1; n <= up_to; ++n) t.rows.push_back({cell(std::uint64_t{n}), cell(g[n])});
    } else if (cfg.which == "gaps") {
        if (up_to < 1) throw UsageError("gaps are tabulated from n = 1");
        std::vector<Word> G = kernel_gaps(a, up_to, conv.gaps, cap);
        meta["conventions"] = conventions_json(conv);
        t.columns = {"n", "g_n", "G_n"};
        for (unsigned n = 1; n <= up_to; ++n) {
            t.rows.push_back({cell(std::uint64_t{n}), cell(std::uint64_t{G[n].size()}), cell(G[n])});
        }
    } else {
        throw UsageError("--which must be one of w, r, g, kernel, gaps");
    }
    print_table(t, cfg.format(), meta, out);
    return kOk;
}

int cmd_factorize(const RunConfig& cfg, std::ostream& out) {
    // --cap doubles as the prefix length here, matching `factorize --cap N`.
    const std::size_t length = cfg.length ? *cfg.length : cfg.cap.value_or(64);
    const Alphabet a(cfg.k);
    const Conventions conv = cfg.conventions();
    std::vector<FactorizationToken> tokens = factorize(a, length, conv, length_cap_from_env());
    Table t;
    t.columns = {"kind", "index", "start", "length", "word"};
    for (const auto& tok : tokens) {
        const bool kernel = tok.kind == TokenKind::Kernel;
        Cell kind = cfg.json ? Cell{"", std::string(to_string(tok.kind))} : Cell{kernel ? "R" : "G", nullptr};
        t.rows.push_back({kind, cell(std::uint64_t{tok.index}), cell(tok.start), cell(std::uint64_t{tok.word.size()}),
                          cell(tok.word)});
    }
    if (cfg.json) {
        print_table(t, Format::Json,
                    json{{"k", cfg.k}, {"length", length}, {"conventions", conventions_json(conv)}}, out);
    } else if (cfg.csv) {
        print_table(t, Format::Csv, {}, out);
    } else {
        for (const auto& row : t.rows) {
            out << row[0].text << "\t" << row[1].text << "\t" << row[2].text << "\t" << row[3].text << "\t"
                << row[4].text << "\n";
        }
    }
    return kOk;
}

int cmd_gaps(const RunConfig& cfg, std::ostream& out) {
    if (cfg.factor.empty()) throw UsageError("gaps needs --factor");
    const Alphabet a(cfg.k);
    const unsigned depth = cfg.depth.value_or(10);
    Word pattern = Word::from_text(cfg.factor, a);
    FactorGaps fg = factor_gaps(pattern, depth, cfg.length_cap());
    Table t;
    t.columns = {"p", "kind", "orientation", "left_start", "right_start", "length", "word"};
    t.rows.push_back({cell(std::uint64_t{0}), Cell{"leading", "leading"}, Cell{"positive", "positive"},
                      Cell{"-", nullptr}, cell(std::optional<std::size_t>(fg.occurrences.front().start)),
                      cell(std::uint64_t{fg.leading.size()}), cell(fg.leading)});
    for (const Gap& g : fg.gaps) {
        const std::string kind(to_string(g.kind));
        const std::string orient(to_string(g.orientation));
        t.rows.push_back({cell(std::uint64_t{g.index}), Cell{kind, kind}, Cell{orient, orient},
                          cell(std::optional<std::size_t>(g.left_start)),
                          cell(std::optional<std::size_t>(g.right_start)), cell(std::uint64_t{g.word.size()}),
                          cell(g.word)});
    }
    json meta{{"k", cfg.k}, {"factor", letters(pattern)}, {"depth", depth},
              {"occurrences", fg.occurrences.size()}};
    if (cfg.format() == Format::Text) {
        out << "factor " << pattern.to_text() << " in W_" << depth << ": " << fg.occurrences.size()
            << " occurrences\n";
    }
    print_table(t, cfg.format(), meta, out);
    return kOk;
}

json report_json(const Report& r, bool timing) {
    json params = json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    json doc{{"check", r.check},
             {"params", params},
             {"status", std::string(to_string(r.status))},
             {"documented", r.documented},
             {"mismatch_position", r.mismatch_position ? json(*r.mismatch_position) : json(nullptr)},
             {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)},
             {"detail", r.detail}};
    if (timing) doc["elapsed_seconds"] = r.elapsed.count();
    return doc;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.csv) throw UsageError("--csv is not available for verify");
    const Alphabet a(cfg.k);
    const unsigned depth = cfg.depth.value_or(12);
    VerifyOptions options;
    options.conventions = cfg.conventions();
    options.cap = cfg.length_cap();
    std::vector<Report> reports = verify_all(a, depth, options);

    std::size_t pass = 0, fail = 0, documented = 0, ood = 0;
    for (const Report& r : reports) {
        if (r.passed()) ++pass;
        if (r.failed()) ++fail;
        if (r.failed() && r.documented) ++documented;
        if (r.status == Status::OutOfDomain) ++ood;
    }
    const std::size_t unexpected = fail - documented;
    const bool falsified = unexpected > 0 || (cfg.strict && fail > 0);

    if (cfg.json) {
        json doc{{"k", cfg.k}, {"depth", depth}, {"conventions", conventions_json(options.conventions)}};
        json list = json::array();
        for (const Report& r : reports) list.push_back(report_json(r, cfg.timing));
        doc["reports"] = std::move(list);
        doc["summary"] = {{"pass", pass}, {"fail", fail}, {"documented", documented}, {"out_of_domain", ood},
                          {"strict", cfg.strict}, {"exit_code", falsified ? kFalsified : kOk}};
        out << doc.dump(2) << "\n";
    } else {
        for (const Report& r : reports) {
            std::string status = r.passed() ? "PASS" : r.failed() ? (r.documented ? "DOCUMENTED" : "FAIL") : "N/A";
            out << std::left << std::setw(11) << status << r.check << " [" << r.params_text() << "]";
            if (cfg.timing) out << " " << std::fixed << std::setprecision(3) << r.elapsed.count() << "s";
            out << "\n";
            if (r.passed()) continue;
            out << "           " << r.detail << "\n";
            if (r.mismatch_position) out << "           first mismatch at position " << *r.mismatch_position << "\n";
            if (r.counterexample && r.failed()) out << "           counterexample " << *r.counterexample << "\n";
        }
        out << reports.size() << " checks: " << pass << " pass, " << fail << " fail (" << documented
            << " documented), " << ood << " out of domain\n";
    }
    return falsified ? kFalsified : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Generalized period-doubling sequences P_k: generation, kernel factorization, gaps, checks",
                 "pdseq"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    app.add_option("-k,--alphabet", cfg.k, "Alphabet size k (default 3)")->check(CLI::Range(2u, kMaxAlphabetSize));
    app.add_option("--length", cfg.length, "Prefix length");
    app.add_option("--level", cfg.level, "Print W_n = s_k^n(0)")->check(CLI::Range(0u, 62u));
    app.add_option("--up-to", cfg.up_to, "Last table index");
    app.add_option("--cap", cfg.cap, "Length cap for materialized words (factorize: prefix length)")
        ->check(CLI::PositiveNumber);
    app.add_option("--depth", cfg.depth, "Depth for gaps and verify");
    app.add_option("--which", cfg.which, "Table: w, r, g, kernel, gaps")
        ->check(CLI::IsMember({"w", "r", "g", "kernel", "gaps"}));
    app.add_option("--factor", cfg.factor, "Factor for the gaps command (text form)");
    auto* json_flag = app.add_flag("--json", cfg.json, "JSON output");
    auto* csv_flag = app.add_flag("--csv", cfg.csv, "CSV output");
    json_flag->excludes(csv_flag);
    app.add_flag("--strict", cfg.strict, "verify: documented findings also fail");
    app.add_flag("--paper-literal", cfg.paper_literal,
                 "Read the kernel parity rule, gap indexing and slices literally");
    app.add_option("--gap-rule", cfg.gap_rule, "Override the gap rule: canonical, shifted, paper-literal")
        ->check(CLI::IsMember({"canonical", "shifted", "paper-literal"}));
    app.add_flag("--timing", cfg.timing, "verify: include per-check timings (output no longer deterministic)");

    auto* generate = app.add_subcommand("generate", "Print a prefix of P_k or W_n");
    auto* table = app.add_subcommand("table", "Tabulate W/p, r, g, kernel words or gap words");
    auto* factorize_cmd = app.add_subcommand("factorize", "Print the R_1 G_1 R_2 G_2 ... token stream");
    auto* gaps = app.add_subcommand("gaps", "Classified gaps between occurrences of a factor in W_depth");
    auto* verify = app.add_subcommand("verify", "Run every check and report");

    std::vector<const char*> argv{"pdseq"};
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(cfg, out);
        if (table->parsed()) {
            if (cfg.which.empty()) throw UsageError("table needs --which");
            return cmd_table(cfg, out);
        }
        if (factorize_cmd->parsed()) return cmd_factorize(cfg, out);
        if (gaps->parsed()) return cmd_gaps(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "resource error: " << e.what() << "\n";
        return kUsage;
    } catch (const FalsificationError& e) {
        err << "falsified: " << e.what();
        if (e.position()) err << " (first mismatch at position " << e.position() << ")";
        err << "\n";
        return kFalsified;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace pdseq::cli
