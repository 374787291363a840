// lwdtool: construct binary linear codes, compute weight / local weight /
// only-odd-decomposable spectra, apply the extended-code and even-subcode
// transfer identities, and check published tables for internal consistency.
//
// Exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 enumeration
// cap exceeded, 5 identity violation or failed check, 1 internal error.

#include <bit>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lwd/codes.hpp"
#include "lwd/cosets.hpp"
#include "lwd/neighbors.hpp"
#include "lwd/relations.hpp"
#include "lwd/report.hpp"
#include "lwd/table2.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;
constexpr int kExitIdentity = 5;

using Clock = std::chrono::steady_clock;

std::uint64_t ms_since(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
            .count());
}

long long parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw lwd::ParseError(std::string(what) + " must be an integer, got '" + s + "'");
    }
}

struct CodeSource {
    std::string matrix_path;
    std::vector<std::string> family;
    std::vector<long long> random_params;
    std::uint64_t seed = 1;

    void add_options(CLI::App* cmd) {
        cmd->add_option("matrix", matrix_path, "generator matrix text file");
        cmd->add_option("--family", family,
                        "code family and parameters: hamming R | rm R M | bch M D")
            ->expected(-1);
        cmd->add_option("--random", random_params, "random code: N K (see --seed)")
            ->expected(2);
        cmd->add_option("--seed", seed, "seed for --random");
    }

    lwd::LinearCode build() const {
        int sources = (!matrix_path.empty()) + (!family.empty()) + (!random_params.empty());
        if (sources != 1)
            throw lwd::ParseError(
                "specify exactly one code source: a matrix file, --family, or --random");
        if (!matrix_path.empty()) return lwd::load_generator_matrix_file(matrix_path);
        if (!random_params.empty())
            return lwd::random_linear_code(static_cast<std::size_t>(random_params[0]),
                                           static_cast<std::size_t>(random_params[1]),
                                           seed);
        return from_family(family, seed);
    }

    static lwd::LinearCode from_family(const std::vector<std::string>& spec,
                                       std::uint64_t seed) {
        if (spec.empty()) throw lwd::ParseError("empty --family");
        const std::string& name = spec.front();
        auto arg = [&](std::size_t i, const char* what) {
            if (i >= spec.size())
                throw lwd::ParseError("family '" + name + "' is missing its " + what);
            return parse_int(spec[i], what);
        };
        if (name == "hamming") return lwd::hamming(static_cast<unsigned>(arg(1, "order r")));
        if (name == "rm")
            return lwd::reed_muller(static_cast<unsigned>(arg(1, "order r")),
                                    static_cast<unsigned>(arg(2, "variable count m")));
        if (name == "bch")
            return lwd::bch(static_cast<unsigned>(arg(1, "field degree m")),
                            static_cast<unsigned>(arg(2, "designed distance d")));
        if (name == "random")
            return lwd::random_linear_code(static_cast<std::size_t>(arg(1, "length n")),
                                           static_cast<std::size_t>(arg(2, "dimension k")),
                                           seed);
        throw lwd::ParseError("unknown family '" + name +
                              "' (expected hamming, rm, bch, or random)");
    }
};

void print_table(std::ostream& out, const lwd::LwdReport& r) {
    out << "(" << r.n << "," << r.k << ") code, mode=" << r.mode << ", "
        << r.duration_ms << " ms\n";
    const bool have_n = r.only_odd.has_value();
    std::size_t width = 12;
    auto widen = [&width](const std::optional<lwd::WeightTally>& t) {
        if (!t) return;
        for (const auto& [w, c] : t->entries())
            width = std::max(width, lwd::with_thousands(c).size() + 2);
    };
    widen(r.weights);
    widen(r.local);
    widen(r.only_odd);

    out << std::setw(5) << "w" << std::setw(static_cast<int>(width)) << "A_w"
        << std::setw(static_cast<int>(width)) << "L_w";
    if (have_n) out << std::setw(static_cast<int>(width)) << "N_w";
    out << "\n";
    for (unsigned w = 1; w <= r.n; ++w) {
        if (!r.weights || r.weights->at(w) == 0) continue;
        out << std::setw(5) << w << std::setw(static_cast<int>(width))
            << lwd::with_thousands(r.weights->at(w)) << std::setw(static_cast<int>(width))
            << lwd::with_thousands(r.local ? r.local->at(w) : 0);
        if (have_n)
            out << std::setw(static_cast<int>(width))
                << lwd::with_thousands(r.only_odd->at(w));
        out << "\n";
    }
}

void print_tally_table(std::ostream& out, const lwd::WeightTally& t,
                       const std::string& heading) {
    out << heading << "\n";
    std::size_t width = 12;
    for (const auto& [w, c] : t.entries())
        width = std::max(width, lwd::with_thousands(c).size() + 2);
    out << std::setw(5) << "w" << std::setw(static_cast<int>(width)) << "L_w" << "\n";
    for (const auto& [w, c] : t.entries())
        out << std::setw(5) << w << std::setw(static_cast<int>(width))
            << lwd::with_thousands(c) << "\n";
}

void print_checks(std::ostream& out, const std::vector<lwd::RelationCheck>& checks) {
    for (const auto& c : checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) out << " - " << c.detail;
        out << "\n";
    }
}

// ---------------------------------------------------------------- construct

int cmd_construct(const std::vector<std::string>& spec, std::uint64_t seed,
                  const std::string& out_path) {
    lwd::LinearCode code = CodeSource::from_family(spec, seed);
    if (out_path.empty()) {
        lwd::save_generator_matrix(std::cout, code);
    } else {
        lwd::save_generator_matrix_file(out_path, code);
    }
    std::cout << "(" << code.length() << "," << code.dimension() << ")\n";
    return kExitOk;
}

// ---------------------------------------------------------------------- lwd

struct LwdArgs {
    CodeSource source;
    std::string mode = "shortcut";
    std::string subcode;
    std::string group;
    unsigned threads = 1;
    bool force = false;
    bool json = false;
};

lwd::LinearCode resolve_subcode(const std::string& spec, const lwd::LinearCode& code) {
    if (spec == "even") {
        lwd::LinearCode sub = lwd::even_subcode(code);
        if (sub.dimension() == code.dimension())
            throw lwd::PreconditionError(
                "the code is already even-weight; its even subcode is not proper");
        return sub;
    }
    return lwd::load_generator_matrix_file(spec);
}

std::vector<lwd::Permutation> resolve_group(const std::string& spec, std::size_t n) {
    if (spec == "cyclic") return {lwd::cyclic_shift(n)};
    if (spec == "affine") {
        if (n == 0 || (n & (n - 1)) != 0)
            throw lwd::PreconditionError(
                "affine generators need the length to be a power of two");
        unsigned m = static_cast<unsigned>(std::countr_zero(n));
        return lwd::affine_group_generators(m);
    }
    return lwd::load_permutations_file(spec);
}

int cmd_lwd(const LwdArgs& args) {
    Clock::time_point start = Clock::now();
    lwd::LinearCode code = args.source.build();
    lwd::SweepOptions opts;
    opts.threads = args.threads;
    if (args.force) opts.enumeration_cap = 62;

    lwd::LwdReport report;
    report.n = code.length();
    report.k = code.dimension();
    report.mode = args.mode;

    if (args.mode == "cosets") {
        if (args.subcode.empty() || args.group.empty())
            throw lwd::PreconditionError("--mode cosets needs --subcode and --group");
        lwd::LinearCode sub = resolve_subcode(args.subcode, code);
        std::vector<lwd::Permutation> gens = resolve_group(args.group, code.length());
        report.weights = lwd::weight_distribution(code, opts);
        report.local = lwd::lwd_via_cosets(code, sub, gens, opts);
    } else {
        if (args.mode != "brute" && args.mode != "shortcut")
            throw lwd::ParseError("unknown mode '" + args.mode + "'");
        opts.use_shortcuts = args.mode == "shortcut";
        lwd::Spectra s = lwd::full_spectra(code, opts);
        report.weights = std::move(s.weights);
        report.local = std::move(s.local);
        report.only_odd = std::move(s.only_odd);
    }
    report.duration_ms = ms_since(start);

    if (args.json)
        std::cout << lwd::report_to_json(report).dump(2) << "\n";
    else
        print_table(std::cout, report);
    return kExitOk;
}

// ------------------------------------------------------------------- relate

struct TallyInput {
    lwd::WeightTally tally;
    std::size_t n = 0;
    std::size_t k = 0;  // 0 when unknown
};

TallyInput load_tally(const std::string& path, const char* field, long long n_flag) {
    std::ifstream in(path);
    if (!in) throw lwd::ParseError("cannot open tally file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw lwd::ParseError("invalid JSON in " + path + ": " + e.what());
    }
    if (j.is_object() && j.contains("n") && j.contains("k")) {
        lwd::LwdReport r = lwd::report_from_json(j);
        const std::optional<lwd::WeightTally>& t =
            std::string(field) == "N" ? r.only_odd : r.local;
        if (!t)
            throw lwd::ParseError(path + " does not contain tally '" + field + "'");
        return {*t, r.n, r.k};
    }
    if (n_flag <= 0)
        throw lwd::ParseError("bare tally files need --n to give the code length");
    return {lwd::tally_from_json(j, static_cast<std::size_t>(n_flag)),
            static_cast<std::size_t>(n_flag), 0};
}

struct RelateArgs {
    std::string direction;
    std::string l_path;
    std::string n_path;
    bool n_zero = false;
    long long n_flag = 0;
    bool transitive = false;
    bool json = false;
};

int cmd_relate(const RelateArgs& args) {
    Clock::time_point start = Clock::now();
    if (args.l_path.empty()) throw lwd::ParseError("--L is required");
    TallyInput l = load_tally(args.l_path, "L", args.n_flag);

    std::size_t n_for_n = args.direction == "puncture" ? l.n - 1 : l.n;
    lwd::WeightTally n_tally(n_for_n);
    if (!args.n_path.empty() && args.n_zero)
        throw lwd::ParseError("--N and --n-zero are mutually exclusive");
    if (!args.n_path.empty()) {
        TallyInput ni = load_tally(args.n_path, "N", static_cast<long long>(n_for_n));
        if (ni.n != n_for_n)
            throw lwd::PreconditionError("N tally has length " + std::to_string(ni.n) +
                                         ", expected " + std::to_string(n_for_n));
        n_tally = ni.tally;
    } else if (!args.n_zero) {
        throw lwd::ParseError("provide --N FILE or assert --n-zero");
    }

    lwd::LwdReport report;
    report.mode = "relate-" + args.direction;
    if (args.direction == "extend") {
        report.local = lwd::extend_lwd(l.tally, n_tally);
        report.n = l.n + 1;
        report.k = l.k;
    } else if (args.direction == "even") {
        report.local = lwd::even_subcode_lwd(l.tally, n_tally);
        report.n = l.n;
        report.k = l.k > 0 ? l.k - 1 : 0;
    } else if (args.direction == "puncture") {
        if (!args.transitive)
            throw lwd::PreconditionError(
                "puncture needs --transitive: the extended code must be asserted "
                "transitive invariant");
        if (l.n < 2) throw lwd::PreconditionError("extended length must be at least 2");
        report.local = lwd::puncture_lwd_transitive(l.tally, n_tally);
        report.n = l.n - 1;
        report.k = l.k;
    } else {
        throw lwd::ParseError("unknown direction '" + args.direction +
                              "' (expected extend, puncture, or even)");
    }
    report.duration_ms = ms_since(start);

    if (args.json) {
        std::cout << lwd::report_to_json(report).dump(2) << "\n";
    } else {
        std::ostringstream head;
        head << "L after " << args.direction << " (n=" << report.n << ")";
        print_tally_table(std::cout, *report.local, head.str());
    }
    return kExitOk;
}

// -------------------------------------------------------------- check-table

int cmd_check_table(const std::vector<std::string>& ids, const std::string& file,
                    long long n_flag, bool json) {
    Clock::time_point start = Clock::now();
    std::vector<lwd::LwdReport> reports;
    bool all_pass = true;

    if (!file.empty()) {
        TallyInput in = load_tally(file, "L", n_flag);
        lwd::LwdReport r;
        r.n = in.n;
        r.k = in.k;
        r.mode = "check-table";
        r.local = in.tally;
        r.checks = lwd::table_ratio_check(in.tally, in.n).checks;
        reports.push_back(std::move(r));
    } else {
        std::vector<std::string> wanted = ids;
        if (wanted.empty())
            for (const auto& col : lwd::table2_columns()) wanted.push_back(col.id);
        lwd::RelationReport transcription = lwd::table2_transcription_check();
        for (const auto& id : wanted) {
            const lwd::Table2Column& col = lwd::table2_column(id);
            lwd::LwdReport r;
            r.n = col.n;
            r.k = col.k;
            r.mode = "check-table";
            r.local = col.lwd;
            for (const auto& c : transcription.checks)
                if (c.name == "checksum[" + id + "]") r.checks.push_back(c);
            for (auto& c : lwd::table_ratio_check(col.lwd, col.n).checks)
                r.checks.push_back(std::move(c));
            reports.push_back(std::move(r));
        }
    }

    std::uint64_t elapsed = ms_since(start);
    nlohmann::json out = nlohmann::json::array();
    for (auto& r : reports) {
        r.duration_ms = elapsed;
        for (const auto& c : r.checks) all_pass = all_pass && c.pass;
        if (json) {
            out.push_back(lwd::report_to_json(r));
        } else {
            std::cout << "(" << r.n << "," << r.k << ")\n";
            print_checks(std::cout, r.checks);
        }
    }
    if (json) std::cout << (out.size() == 1 ? out.front() : out).dump(2) << "\n";
    return all_pass ? kExitOk : kExitIdentity;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const CodeSource& source, unsigned threads, bool force, bool json) {
    Clock::time_point start = Clock::now();
    lwd::LinearCode code = source.build();
    lwd::SweepOptions opts;
    opts.threads = threads;
    if (force) opts.enumeration_cap = 62;
    lwd::RelationReport rel = lwd::verify_all_relations(code, opts);

    lwd::LwdReport report;
    report.n = code.length();
    report.k = code.dimension();
    report.mode = "verify";
    lwd::Spectra s = lwd::full_spectra(code, opts);
    report.weights = std::move(s.weights);
    report.local = std::move(s.local);
    report.only_odd = std::move(s.only_odd);
    report.checks = rel.checks;
    report.duration_ms = ms_since(start);

    if (json)
        std::cout << lwd::report_to_json(report).dump(2) << "\n";
    else
        print_checks(std::cout, report.checks);
    return rel.all_pass() ? kExitOk : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local weight distribution toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a generator matrix");
    std::vector<std::string> construct_spec;
    std::string construct_out;
    std::uint64_t construct_seed = 1;
    construct->add_option("spec", construct_spec, "hamming R | rm R M | bch M D | random N K")
        ->expected(-1)
        ->required();
    construct->add_option("-o,--output", construct_out, "write the matrix to this file");
    construct->add_option("--seed", construct_seed, "seed for random codes");

    // lwd
    auto* lwd_cmd = app.add_subcommand("lwd", "compute A/L/N spectra");
    LwdArgs lwd_args;
    lwd_args.source.add_options(lwd_cmd);
    lwd_cmd->add_option("--mode", lwd_args.mode, "brute | shortcut | cosets")
        ->check(CLI::IsMember({"brute", "shortcut", "cosets"}));
    lwd_cmd->add_option("--subcode", lwd_args.subcode, "cosets of: 'even' or a matrix file");
    lwd_cmd->add_option("--group", lwd_args.group,
                        "'cyclic', 'affine', or a permutation file");
    lwd_cmd->add_option("--threads", lwd_args.threads, "worker count for the sweep");
    lwd_cmd->add_flag("--force", lwd_args.force, "lift the enumeration cap");
    lwd_cmd->add_flag("--json", lwd_args.json, "emit a JSON report");

    // relate
    auto* relate = app.add_subcommand("relate", "apply a transfer identity to tallies");
    RelateArgs relate_args;
    relate->add_option("direction", relate_args.direction, "extend | puncture | even")
        ->required();
    relate->add_option("--L", relate_args.l_path, "JSON report or bare tally with L")
        ->required();
    relate->add_option("--N", relate_args.n_path, "JSON report or bare tally with N");
    relate->add_flag("--n-zero", relate_args.n_zero,
                     "assert N = 0 (e.g. all extended weights are multiples of four)");
    relate->add_option("--n", relate_args.n_flag, "code length for bare tally files");
    relate->add_flag("--transitive", relate_args.transitive,
                     "assert the extended code is transitive invariant");
    relate->add_flag("--json", relate_args.json, "emit a JSON report");

    // check-table
    auto* check = app.add_subcommand("check-table",
                                     "consistency-check published distributions");
    std::vector<std::string> check_ids;
    std::string check_file;
    long long check_n = 0;
    bool check_json = false;
    check->add_option("ids", check_ids, "builtin columns: 127_36 127_43 127_50 127_64rm");
    check->add_option("--file", check_file, "JSON report or bare tally to check instead");
    check->add_option("--n", check_n, "code length for bare tally files");
    check->add_flag("--json", check_json, "emit JSON reports");

    // verify
    auto* verify = app.add_subcommand("verify", "brute-force-verify the identities");
    CodeSource verify_source;
    unsigned verify_threads = 1;
    bool verify_force = false;
    bool verify_json = false;
    verify_source.add_options(verify);
    verify->add_option("--threads", verify_threads, "worker count for the sweep");
    verify->add_flag("--force", verify_force, "lift the enumeration cap");
    verify->add_flag("--json", verify_json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (construct->parsed())
            return cmd_construct(construct_spec, construct_seed, construct_out);
        if (lwd_cmd->parsed()) return cmd_lwd(lwd_args);
        if (relate->parsed()) return cmd_relate(relate_args);
        if (check->parsed())
            return cmd_check_table(check_ids, check_file, check_n, check_json);
        if (verify->parsed())
            return cmd_verify(verify_source, verify_threads, verify_force, verify_json);
        std::cerr << "no subcommand given\n";
        return kExitParse;
    } catch (const lwd::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const lwd::CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const lwd::IdentityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIdentity;
    } catch (const lwd::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
