#include "subseq/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subseq/analysis.hpp"
#include "subseq/counting.hpp"
#include "subseq/errors.hpp"
#include "subseq/expectation.hpp"
#include "subseq/montecarlo.hpp"
#include "subseq/oracle.hpp"
#include "subseq/verify.hpp"

namespace subseq::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// RFC 4180: quote fields containing separators, quotes or line breaks.
std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? "," : "") << csv_field(fields[i]);
    }
    out << "\r\n";
}

/// Counts up to 64 bits become JSON integers; larger ones decimal strings.
json big_json(const BigCount& v)
{
    if (v.fits_ulong_p()) {
        return static_cast<std::uint64_t>(v.get_ui());
    }
    return v.get_str();
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::size_t parse_size(const std::string& text, const std::string& what)
{
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        if (!text.empty() && text.front() == '-') {
            throw std::invalid_argument("negative");
        }
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw InvalidInput(what + " must be a nonnegative integer, got '" + text + "'");
    }
    if (pos != text.size()) {
        throw InvalidInput(what + " must be a nonnegative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

// Model flags shared by expect / simulate / superpattern.
struct ModelFlags {
    std::string alpha;
    std::string probs;
    std::string markov;

    void attach(CLI::App& app)
    {
        auto* a = app.add_option("--alpha", alpha, "binary IID model: Pr[letter 1] (decimal or p/q)");
        auto* p = app.add_option("--probs", probs, "IID model over 0..d-1: p0,p1,... (decimal or p/q)");
        auto* m = app.add_option("--markov", markov, "binary Markov chain: Pr[1|1],Pr[1|0]");
        a->excludes(p)->excludes(m);
        p->excludes(m);
    }

    bool any() const { return !alpha.empty() || !probs.empty() || !markov.empty(); }
    bool is_markov() const { return !markov.empty(); }

    IidModel<Rational> iid() const
    {
        if (!alpha.empty()) {
            return IidModel<Rational>::binary(Rational::parse(alpha));
        }
        if (!probs.empty()) {
            std::vector<Rational> ps;
            for (const auto& f : split(probs, ',')) {
                ps.push_back(Rational::parse(f));
            }
            return IidModel<Rational>(std::move(ps));
        }
        throw InvalidInput("an IID model needs --alpha or --probs");
    }

    MarkovModel<Rational> chain() const
    {
        const auto parts = split(markov, ',');
        if (parts.size() != 2) {
            throw InvalidInput("--markov expects two values: Pr[1|1],Pr[1|0]");
        }
        return MarkovModel<Rational>(Rational::parse(parts[0]), Rational::parse(parts[1]));
    }

    std::string label() const
    {
        if (!alpha.empty()) {
            return "alpha=" + alpha;
        }
        if (!probs.empty()) {
            return "probs=" + probs;
        }
        return "markov=" + markov;
    }

    Model<double> floating() const
    {
        if (is_markov()) {
            return chain().cast<double>();
        }
        return iid().cast<double>();
    }
};

void require_format(const std::string& format)
{
    if (format != "csv" && format != "json") {
        throw InvalidInput("--out must be csv or json");
    }
}

// ---------------------------------------------------------------- count

struct CountArgs {
    std::vector<std::string> strings;
    std::string file;
    std::size_t d = 0;
    bool with_empty = false;
    bool profile = false;
    std::string format = "csv";
};

int count_command(const CountArgs& args, std::ostream& out)
{
    require_format(args.format);
    const std::optional<std::size_t> d = args.d ? std::optional(args.d) : std::nullopt;

    std::vector<LetterString> inputs;
    for (const auto& s : args.strings) {
        inputs.push_back(parse_letter_string(s, d));
    }
    if (!args.file.empty()) {
        std::ifstream in(args.file);
        if (!in) {
            throw InvalidInput("cannot open '" + args.file + "'");
        }
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.find_first_not_of(" \t") == std::string::npos) {
                continue;
            }
            try {
                inputs.push_back(parse_letter_string(line, d));
            } catch (const InvalidInput& e) {
                throw InvalidInput(args.file + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    if (inputs.empty()) {
        throw InvalidInput("count needs at least one string (argument or --file)");
    }

    if (args.format == "csv") {
        std::vector<std::string> header = {"string", "n", "phi"};
        if (args.with_empty) {
            header.emplace_back("phi_with_empty");
        }
        if (args.profile) {
            header.emplace_back("profile");
        }
        csv_row(out, header);
    }
    json rows = json::array();
    for (const auto& t : inputs) {
        const auto profile = new_subseq_counts(t);
        BigCount phi = 0;
        for (const auto& v : profile) {
            phi += v;
        }
        if (args.format == "csv") {
            std::vector<std::string> row = {t.to_string(), std::to_string(t.size()), phi.get_str()};
            if (args.with_empty) {
                row.push_back(BigCount(phi + 1).get_str());
            }
            if (args.profile) {
                std::string p;
                for (std::size_t i = 0; i < profile.size(); ++i) {
                    p += (i ? "," : "") + profile[i].get_str();
                }
                row.push_back(p);
            }
            csv_row(out, row);
        } else {
            json r;
            r["string"] = t.to_string();
            r["d"] = t.alphabet().size();
            r["n"] = t.size();
            r["phi"] = big_json(phi);
            r["phi_with_empty"] = big_json(phi + 1);
            if (args.profile) {
                json p = json::array();
                for (const auto& v : profile) {
                    p.push_back(big_json(v));
                }
                r["profile"] = p;
            }
            rows.push_back(r);
        }
    }
    if (args.format == "json") {
        out << rows.dump(2) << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- expect

struct ExpectArgs {
    ModelFlags model;
    std::string engine;
    std::size_t n = 0;
    bool exact = false;
    std::string format = "csv";
};

int expect_command(const ExpectArgs& args, std::ostream& out)
{
    require_format(args.format);
    if (!args.model.any()) {
        throw InvalidInput("expect needs a model: --alpha, --probs or --markov");
    }
    if (args.n == 0) {
        throw InvalidInput("--n must be at least 1");
    }
    std::string engine = args.engine;
    if (engine.empty()) {
        engine = args.model.is_markov() ? "markov" : (!args.model.alpha.empty() ? "closed" : "matrix");
    }

    std::vector<std::string> values;
    std::vector<json> json_values;
    auto emit_double = [&](const std::vector<double>& vs) {
        for (double v : vs) {
            values.push_back(fmt_double(v));
            json_values.emplace_back(v);
        }
    };
    auto emit_exact = [&](const std::vector<Rational>& vs) {
        for (const auto& v : vs) {
            values.push_back(v.to_string());
            json_values.emplace_back(v.to_string());
        }
    };

    if (engine == "closed") {
        if (args.model.alpha.empty()) {
            throw InvalidInput("the closed-form engine is binary IID only: use --alpha");
        }
        if (args.exact) {
            throw InvalidInput("the closed form involves sqrt(p(1-p)) and is floating-point only; drop --exact");
        }
        const double p = args.model.iid().cast<double>().prob(1);
        std::vector<double> vs;
        for (std::size_t i = 1; i <= args.n; ++i) {
            vs.push_back(closed_form_binary(p, i));
        }
        emit_double(vs);
    } else if (engine == "matrix") {
        if (args.model.is_markov()) {
            throw InvalidInput("the matrix engine takes an IID model (--alpha or --probs)");
        }
        const auto model = args.model.iid();
        if (args.exact) {
            emit_exact(iid_matrix_expectation(model, args.n).values);
        } else {
            emit_double(iid_matrix_expectation(model.cast<double>(), args.n).values);
        }
    } else if (engine == "markov") {
        if (!args.model.is_markov()) {
            throw InvalidInput("the markov engine needs --markov Pr[1|1],Pr[1|0]");
        }
        const auto model = args.model.chain();
        if (args.exact) {
            emit_exact(markov_expectation(model, args.n).values);
        } else {
            emit_double(markov_expectation(model.cast<double>(), args.n).values);
        }
    } else {
        throw InvalidInput("--engine must be closed, matrix or markov");
    }

    if (args.format == "csv") {
        csv_row(out, {"n", "expected"});
        for (std::size_t i = 0; i < values.size(); ++i) {
            csv_row(out, {std::to_string(i + 1), values[i]});
        }
    } else {
        json doc;
        doc["engine"] = engine;
        doc["model"] = args.model.label();
        doc["exact"] = args.exact;
        json series = json::array();
        for (std::size_t i = 0; i < json_values.size(); ++i) {
            series.push_back({{"n", i + 1}, {"expected", json_values[i]}});
        }
        doc["series"] = series;
        out << doc.dump(2) << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- simulate

std::uint64_t default_seed()
{
    if (const char* env = std::getenv(seed_env_var); env && *env) {
        return parse_size(env, seed_env_var);
    }
    return 0;
}

std::vector<std::size_t> parse_grid(const std::string& text)
{
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) {
        throw InvalidInput("--grid expects a:b or a:b:step");
    }
    const std::size_t a = parse_size(parts[0], "grid start");
    const std::size_t b = parse_size(parts[1], "grid end");
    const std::size_t step = parts.size() == 3 ? parse_size(parts[2], "grid step") : 1;
    if (step == 0 || a > b) {
        throw InvalidInput("--grid needs start <= end and step >= 1");
    }
    std::vector<std::size_t> grid;
    for (std::size_t n = a; n <= b; n += step) {
        grid.push_back(n);
    }
    return grid;
}

struct SimulateArgs {
    ModelFlags model;
    std::string kind;
    std::size_t n = 0;
    std::string grid;
    std::size_t trials = 10000;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    std::string format = "csv";
};

json record_json(const montecarlo::EstimateRecord& r)
{
    return {{"n", r.n},
            {"mean", r.mean},
            {"stderr", r.standard_error},
            {"trials", r.trials},
            {"seed", r.seed},
            {"mode", r.mode == montecarlo::EstimateMode::linear ? "linear" : "log"},
            {"log_mean", r.log_mean}};
}

int simulate_command(const SimulateArgs& args, std::ostream& out)
{
    require_format(args.format);
    if (!args.model.any()) {
        throw InvalidInput("simulate needs a model: --alpha, --probs or --markov");
    }
    if (!args.kind.empty()) {
        if (args.kind != "iid" && args.kind != "markov") {
            throw InvalidInput("--model must be iid or markov");
        }
        if ((args.kind == "markov") != args.model.is_markov()) {
            throw InvalidInput("--model " + args.kind + " does not match the model flags given");
        }
    }
    const montecarlo::RunOptions options{args.trials, args.seed ? *args.seed : default_seed(),
                                         std::max(1u, args.workers)};
    const auto model = args.model.floating();

    std::vector<montecarlo::EstimateRecord> records;
    std::optional<montecarlo::GrowthFit> fit;
    if (!args.grid.empty()) {
        const auto grid = parse_grid(args.grid);
        if (grid.size() >= 3) {
            auto growth = montecarlo::estimate_growth_constant(model, grid, options);
            records = std::move(growth.points);
            fit = growth.fit;
        } else {
            for (std::size_t n : grid) {
                records.push_back(montecarlo::estimate_expected_count(model, n, options));
            }
        }
    } else {
        if (args.n == 0) {
            throw InvalidInput("simulate needs --n N (N >= 1) or --grid a:b:step");
        }
        records.push_back(montecarlo::estimate_expected_count(model, args.n, options));
    }

    if (args.format == "csv") {
        csv_row(out, {"n", "mean", "stderr", "trials", "seed", "mode", "log_mean"});
        for (const auto& r : records) {
            csv_row(out, {std::to_string(r.n), fmt_double(r.mean), fmt_double(r.standard_error),
                          std::to_string(r.trials), std::to_string(r.seed),
                          r.mode == montecarlo::EstimateMode::linear ? "linear" : "log",
                          fmt_double(r.log_mean)});
        }
    } else {
        json doc;
        doc["model"] = describe(model);
        doc["workers"] = options.workers;
        json pts = json::array();
        for (const auto& r : records) {
            pts.push_back(record_json(r));
        }
        doc["points"] = pts;
        if (fit) {
            doc["growth"] = {{"c", fit->c},
                             {"slope", fit->slope},
                             {"intercept", fit->intercept},
                             {"rms_residual", fit->rms_residual},
                             {"max_abs_residual", fit->max_abs_residual},
                             {"linear_growth", fit->linear_growth}};
        }
        out << doc.dump(2) << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- verify

int verify_command(const std::string& suite, std::size_t max_n, const std::string& format, std::ostream& out)
{
    if (format != "table" && format != "json") {
        throw InvalidInput("--out must be table or json");
    }
    const auto results = verify::run_suite(suite, max_n);
    bool all = true;
    json doc = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (format == "table") {
            out << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.detail.empty()) {
                out << "  [" << r.detail << "]";
            }
            out << "\n";
        } else {
            doc.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
    }
    if (format == "table") {
        out << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    } else {
        out << doc.dump(2) << "\n";
    }
    return all ? ok : invalid;
}

// ---------------------------------------------------------------- tree-row

int tree_row_command(std::size_t d, std::size_t n, std::ostream& out)
{
    const auto row = oracle::tree_row(d, n);
    for (std::size_t i = 0; i < row.values.size(); ++i) {
        out << (i ? "," : "") << row.values[i].get_str();
    }
    out << "\n";
    return ok;
}

// ---------------------------------------------------------------- superpattern

struct SuperpatternArgs {
    std::vector<std::string> strings;
    std::size_t d = 0;
    ModelFlags model;
    std::size_t n = 0;
    std::size_t trials = 1000;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    std::string format = "csv";
};

int superpattern_command(const SuperpatternArgs& args, std::ostream& out)
{
    require_format(args.format);
    if (!args.strings.empty() && args.model.any()) {
        throw InvalidInput("superpattern takes either strings or a model, not both");
    }
    if (!args.strings.empty()) {
        const std::optional<std::size_t> d = args.d ? std::optional(args.d) : std::nullopt;
        json rows = json::array();
        if (args.format == "csv") {
            csv_row(out, {"string", "d", "k"});
        }
        for (const auto& s : args.strings) {
            const auto t = parse_letter_string(s, d);
            const auto k = montecarlo::superpattern_k(t);
            if (args.format == "csv") {
                csv_row(out, {t.to_string(), std::to_string(t.alphabet().size()), std::to_string(k)});
            } else {
                rows.push_back({{"string", t.to_string()}, {"d", t.alphabet().size()}, {"k", k}});
            }
        }
        if (args.format == "json") {
            out << rows.dump(2) << "\n";
        }
        return ok;
    }
    if (!args.model.any()) {
        throw InvalidInput("superpattern needs strings, or a model (--alpha/--probs/--markov) with --n");
    }
    if (args.n == 0) {
        throw InvalidInput("superpattern experiment needs --n N (N >= 1)");
    }
    const montecarlo::RunOptions options{args.trials, args.seed ? *args.seed : default_seed(),
                                         std::max(1u, args.workers)};
    const auto stats = montecarlo::superpattern_experiment(args.model.floating(), args.n, options);
    if (args.format == "csv") {
        csv_row(out, {"k", "count"});
        for (const auto& [k, c] : stats.histogram) {
            csv_row(out, {std::to_string(k), std::to_string(c)});
        }
    } else {
        json hist = json::array();
        for (const auto& [k, c] : stats.histogram) {
            hist.push_back({{"k", k}, {"count", c}});
        }
        json doc;
        doc["model"] = stats.model;
        doc["n"] = stats.n;
        doc["trials"] = stats.trials;
        doc["seed"] = stats.seed;
        doc["mean_k"] = stats.mean_k;
        doc["mean_k_over_n"] = stats.mean_k_over_n;
        doc["occurrence_threshold"] = analysis::occurrence_threshold().x;
        doc["histogram"] = hist;
        out << doc.dump(2) << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- solve

json root_json(const analysis::RootResult& r)
{
    return {{"x", r.x}, {"residual", r.residual}, {"bracket", {r.lo, r.hi}}, {"iterations", r.iterations}};
}

struct SolveArgs {
    std::string balance;
    bool threshold = false;
    std::vector<std::string> occurrences;
};

int solve_command(const SolveArgs& args, std::ostream& out)
{
    const int chosen = int(!args.balance.empty()) + int(args.threshold) + int(!args.occurrences.empty());
    if (chosen != 1) {
        throw InvalidInput("solve takes exactly one of --balance, --threshold, --occurrences");
    }
    json doc;
    if (!args.balance.empty()) {
        const double target = Rational::parse(args.balance).to_double();
        const auto roots = analysis::solve_balance(target);
        doc["equation"] = "2^x x^x (1-x)^(1-x) = target";
        doc["target"] = target;
        doc["minimizer"] = roots.minimizer;
        doc["lower"] = roots.lower ? root_json(*roots.lower) : json(nullptr);
        doc["upper"] = root_json(roots.upper);
    } else if (args.threshold) {
        doc["equation"] = "H(x) = x";
        doc["root"] = root_json(analysis::occurrence_threshold());
    } else {
        std::optional<std::size_t> n;
        std::string pattern;
        std::string alpha;
        std::string probs;
        for (const auto& kv : args.occurrences) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                throw InvalidInput("--occurrences expects key=value tokens, got '" + kv + "'");
            }
            const auto key = kv.substr(0, eq);
            const auto value = kv.substr(eq + 1);
            if (key == "n") {
                n = parse_size(value, "n");
            } else if (key == "pattern") {
                pattern = value;
            } else if (key == "alpha") {
                alpha = value;
            } else if (key == "probs") {
                probs = value;
            } else {
                throw InvalidInput("unknown --occurrences key '" + key + "' (n, pattern, alpha, probs)");
            }
        }
        if (!n) {
            throw InvalidInput("--occurrences needs n=N");
        }
        if (!alpha.empty() && !probs.empty()) {
            throw InvalidInput("--occurrences takes alpha= or probs=, not both");
        }
        ModelFlags flags;
        flags.alpha = alpha.empty() && probs.empty() ? "1/2" : alpha;
        flags.probs = probs;
        const auto model = flags.iid();
        const auto pat = parse_letter_string(pattern, model.alphabet_size());
        const Rational exact = analysis::expected_occurrences_exact(*n, pat, model);
        doc["n"] = *n;
        doc["pattern"] = pat.to_string();
        doc["model"] = flags.label();
        doc["expected"] = exact.to_double();
        doc["expected_exact"] = exact.to_string();
        doc["log2_expected"] = analysis::log2_expected_occurrences(*n, pat, model);
    }
    out << doc.dump(2) << "\n";
    return ok;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Distinct-subsequence counting and expectations for random strings", "subseq"};
    app.require_subcommand(1);

    CountArgs count;
    auto* count_cmd = app.add_subcommand("count", "count distinct subsequences of fixed strings");
    count_cmd->add_option("strings", count.strings, "digit strings (d<=10) or comma-separated letters");
    count_cmd->add_option("--file", count.file, "file with one string per line");
    count_cmd->add_option("--d", count.d, "alphabet size (default: inferred, at least 2)");
    count_cmd->add_flag("--with-empty", count.with_empty, "also report the count including the empty subsequence");
    count_cmd->add_flag("--profile", count.profile, "report the new-subsequence count of every prefix");
    count_cmd->add_option("--out", count.format, "csv|json");

    ExpectArgs expect;
    auto* expect_cmd = app.add_subcommand("expect", "expected number of distinct subsequences");
    expect.model.attach(*expect_cmd);
    expect_cmd->add_option("--engine", expect.engine, "closed|matrix|markov");
    expect_cmd->add_option("--n", expect.n, "string length")->required();
    expect_cmd->add_flag("--exact", expect.exact, "exact rational arithmetic (matrix and markov engines)");
    expect_cmd->add_option("--out", expect.format, "csv|json");

    SimulateArgs simulate;
    std::uint64_t simulate_seed = 0;
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimates and growth-constant fits");
    simulate.model.attach(*simulate_cmd);
    simulate_cmd->add_option("--model", simulate.kind, "iid|markov (inferred from the model flags)");
    auto* n_opt = simulate_cmd->add_option("--n", simulate.n, "string length");
    auto* grid_opt = simulate_cmd->add_option("--grid", simulate.grid, "lengths a:b[:step]; >= 3 points adds a growth fit");
    n_opt->excludes(grid_opt);
    simulate_cmd->add_option("--trials", simulate.trials, "trials per length");
    auto* sim_seed = simulate_cmd->add_option("--seed", simulate_seed, std::string("master seed (default: $") + seed_env_var + " or 0)");
    simulate_cmd->add_option("--workers", simulate.workers, "worker threads (results do not depend on this)");
    simulate_cmd->add_option("--out", simulate.format, "csv|json");

    std::string suite = "all";
    std::size_t max_n = 10;
    std::string verify_format = "table";
    auto* verify_cmd = app.add_subcommand("verify", "run the brute-force oracle cross-checks");
    verify_cmd->add_option("--suite", suite, "oracle|expectation|all");
    verify_cmd->add_option("--max-n", max_n, "largest binary length swept");
    verify_cmd->add_option("--out", verify_format, "table|json");

    std::size_t tree_d = 2;
    std::size_t tree_n = 0;
    auto* tree_cmd = app.add_subcommand("tree-row", "print a row of the new-subsequence tree");
    tree_cmd->add_option("--d", tree_d, "alphabet size")->required();
    tree_cmd->add_option("--n", tree_n, "row index")->required();

    SuperpatternArgs super;
    std::uint64_t super_seed = 0;
    auto* super_cmd = app.add_subcommand("superpattern", "largest k with every length-k word a subsequence");
    super_cmd->add_option("strings", super.strings, "strings to evaluate");
    super_cmd->add_option("--d", super.d, "alphabet size for the given strings");
    super.model.attach(*super_cmd);
    super_cmd->add_option("--n", super.n, "string length for the sampling experiment");
    super_cmd->add_option("--trials", super.trials, "number of sampled strings");
    auto* sup_seed = super_cmd->add_option("--seed", super_seed, "master seed");
    super_cmd->add_option("--workers", super.workers, "worker threads");
    super_cmd->add_option("--out", super.format, "csv|json");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "occurrence-count equations");
    auto* bal = solve_cmd->add_option("--balance", solve.balance, "solve 2^x x^x (1-x)^(1-x) = TARGET");
    auto* thr = solve_cmd->add_flag("--threshold", solve.threshold, "solve H(x) = x");
    auto* occ = solve_cmd->add_option("--occurrences", solve.occurrences, "n=N pattern=P [alpha=A | probs=p0,p1,...]")
                    ->expected(2, 3);
    bal->excludes(thr)->excludes(occ);
    thr->excludes(occ);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : invalid;
    }

    try {
        if (*count_cmd) {
            return count_command(count, out);
        }
        if (*expect_cmd) {
            return expect_command(expect, out);
        }
        if (*simulate_cmd) {
            if (*sim_seed) {
                simulate.seed = simulate_seed;
            }
            return simulate_command(simulate, out);
        }
        if (*verify_cmd) {
            return verify_command(suite, max_n, verify_format, out);
        }
        if (*tree_cmd) {
            return tree_row_command(tree_d, tree_n, out);
        }
        if (*super_cmd) {
            if (*sup_seed) {
                super.seed = super_seed;
            }
            return superpattern_command(super, out);
        }
        if (*solve_cmd) {
            return solve_command(solve, out);
        }
    } catch (const GuardViolation& e) {
        err << "error: " << e.what() << "\n";
        return guard;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    }
    return invalid;
}

} // namespace subseq::cli
