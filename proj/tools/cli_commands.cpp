#include "cli_commands.hpp"

#include "tbern/errors.hpp"
#include "tbern/padic.hpp"
#include "tbern/serialize.hpp"
#include "tbern/symmetry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace tbern::cli {

namespace {

struct Common {
    std::string format = "text";
    std::string out_path;
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, Common& common, bool with_jobs = false)
{
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", common.out_path, "Write output to FILE");
    if (with_jobs) {
        cmd->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    }
}

void emit(const std::string& body, const Common& common, std::ostream& out)
{
    if (common.out_path.empty()) {
        out << body;
        return;
    }
    std::ofstream file(common.out_path);
    if (!file) {
        throw ParameterError("cannot open " + common.out_path);
    }
    file << body;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

std::vector<long> parse_longs(const std::string& text, const std::string& what)
{
    std::vector<long> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw ParameterError("bad " + what + ": '" + text + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw ParameterError("empty " + what);
    }
    return values;
}

Weights parse_weights(const std::string& text)
{
    const auto v = parse_longs(text, "weights");
    if (v.size() != 3) {
        throw ParameterError("weights need three components: '" + text + "'");
    }
    for (long x : v) {
        if (x < 1) {
            throw ParameterError("weights must be positive: '" + text + "'");
        }
    }
    return {v[0], v[1], v[2]};
}

std::string join(const std::vector<long>& values, char sep = ',')
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            s += sep;
        }
        s += std::to_string(values[i]);
    }
    return s;
}

std::string join(const Weights& w)
{
    return join(std::vector<long>(w.begin(), w.end()));
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

std::vector<DirichletCharacter> characters_mod(long d)
{
    if (d < 1) {
        throw ParameterError("d must be positive");
    }
    return enumerate_characters(d);
}

DirichletCharacter select_character(long d, long index)
{
    auto chars = characters_mod(d);
    if (index < 0 || index >= static_cast<long>(chars.size())) {
        throw ParameterError("character index " + std::to_string(index) + " out of range: d = " +
                             std::to_string(d) + " has " + std::to_string(chars.size()) + " characters");
    }
    return chars[static_cast<std::size_t>(index)];
}

void note_imprimitive(const DirichletCharacter& chi, long index, std::ostream& err)
{
    if (!chi.is_primitive()) {
        err << "note: character " << index << " mod " << chi.modulus() << " is imprimitive (conductor "
            << chi.conductor() << ")\n";
    }
}

std::uint32_t check_xi_order(long order)
{
    if (order < 1) {
        throw ParameterError("xi order must be at least 1");
    }
    return static_cast<std::uint32_t>(order);
}

// Context selectors shared by bernoulli and verify.
struct Selectors {
    long d = 1;
    long char_index = 0;
    long xi_order = 1;
    long xi_exp = 1;
};

void add_selectors(CLI::App* cmd, Selectors& sel)
{
    cmd->add_option("--d", sel.d, "Modulus")->capture_default_str();
    cmd->add_option("--char", sel.char_index, "Character index (see chars)")->capture_default_str();
    cmd->add_option("--xi-order", sel.xi_order, "xi = zeta_r^e: r")->capture_default_str();
    cmd->add_option("--xi-exp", sel.xi_exp, "xi = zeta_r^e: e")->capture_default_str();
}

TwistContext make_context(const Selectors& sel, std::ostream& err)
{
    const std::uint32_t order = check_xi_order(sel.xi_order);
    DirichletCharacter chi = select_character(sel.d, sel.char_index);
    note_imprimitive(chi, sel.char_index, err);
    return TwistContext(std::move(chi), order, sel.xi_exp);
}

Json selector_json(const Selectors& sel, const TwistContext& ctx)
{
    return Json{{"d", sel.d},
                {"char", sel.char_index},
                {"character", to_json(ctx.character())},
                {"primitive", ctx.character().is_primitive()},
                {"xi_order", sel.xi_order},
                {"xi_exp", sel.xi_exp}};
}

// chars

int cmd_chars(long d, const Common& common, std::ostream& out)
{
    const auto chars = characters_mod(d);
    std::ostringstream body;
    if (common.format == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < chars.size(); ++i) {
            Json row{{"index", i}};
            row.update(to_json(chars[i]));
            row["primitive"] = chars[i].is_primitive();
            rows.push_back(std::move(row));
        }
        body << dump(rows);
    } else if (common.format == "csv") {
        body << "index,exponents,conductor,order,primitive\n";
        for (std::size_t i = 0; i < chars.size(); ++i) {
            body << i << ',' << join(chars[i].exponents(), ' ') << ',' << chars[i].conductor() << ','
                 << chars[i].value_order() << ',' << (chars[i].is_primitive() ? "yes" : "no") << '\n';
        }
    } else {
        body << std::left << std::setw(7) << "index" << std::setw(12) << "exponents" << std::setw(11)
             << "conductor" << std::setw(7) << "order"
             << "primitive\n";
        for (std::size_t i = 0; i < chars.size(); ++i) {
            body << std::setw(7) << i << std::setw(12) << ("[" + join(chars[i].exponents(), ' ') + "]")
                 << std::setw(11) << chars[i].conductor() << std::setw(7) << chars[i].value_order()
                 << (chars[i].is_primitive() ? "yes" : "no") << '\n';
        }
    }
    emit(body.str(), common, out);
    return ok;
}

// bernoulli

int cmd_bernoulli(const Selectors& sel, unsigned n_max, const Common& common, std::ostream& out,
                  std::ostream& err)
{
    const TwistContext ctx = make_context(sel, err);
    const BernoulliTable table = bernoulli_numbers(ctx, n_max);
    std::ostringstream body;
    if (common.format == "json") {
        Json params = selector_json(sel, ctx);
        params["n_max"] = n_max;
        Json values = Json::array();
        for (std::size_t n = 0; n < table.values.size(); ++n) {
            values.push_back(Json{{"n", n}, {"value", to_json(table.values[n])}});
        }
        body << dump(Json{{"params", std::move(params)}, {"values", std::move(values)}});
    } else if (common.format == "csv") {
        body << "n,value\n";
        for (std::size_t n = 0; n < table.values.size(); ++n) {
            body << n << ',' << csv_field(to_json(table.values[n]).dump()) << '\n';
        }
    } else {
        body << "# " << ctx.describe() << ", z = zeta_" << ctx.field()->order() << '\n';
        for (std::size_t n = 0; n < table.values.size(); ++n) {
            body << "B_" << n << " = " << table.values[n].to_string() << '\n';
        }
    }
    emit(body.str(), common, out);
    return ok;
}

// verify

std::vector<int> theorem_ids(const std::string& which)
{
    if (which == "all") {
        return {1, 2, 3, 4, 5, 6, 7, 8};
    }
    const auto ids = parse_longs(which, "theorem id");
    std::vector<int> out;
    for (long id : ids) {
        if (id < 1 || id > 8) {
            throw ParameterError("theorem id must be 1..8 or all");
        }
        out.push_back(static_cast<int>(id));
    }
    return out;
}

int cmd_verify(const std::string& which, const Selectors& sel, const std::string& w_text, unsigned n,
               const Common& common, std::ostream& out, std::ostream& err)
{
    const auto ids = theorem_ids(which);
    const Weights w = parse_weights(w_text);
    const TwistContext ctx = make_context(sel, err);
    Evaluator evaluator(ctx, w);
    std::vector<TheoremReport> reports;
    bool all_pass = true;
    for (int id : ids) {
        reports.push_back(verify_theorem(id, evaluator, n));
        all_pass = all_pass && reports.back().pass;
    }
    std::ostringstream body;
    if (common.format == "json") {
        if (reports.size() == 1) {
            body << dump(to_json(reports.front()));
        } else {
            Json arr = Json::array();
            for (const auto& r : reports) {
                arr.push_back(to_json(r));
            }
            body << dump(arr);
        }
    } else if (common.format == "csv") {
        body << "theorem,context,w,n,verdict,printed_form_holds,detail\n";
        for (const auto& r : reports) {
            body << r.theorem << ',' << csv_field(r.context) << ',' << csv_field(join(r.w)) << ',' << r.n << ','
                 << (r.pass ? "pass" : "fail") << ','
                 << (r.printed_form_holds ? (*r.printed_form_holds ? "yes" : "no") : "") << ','
                 << csv_field(r.detail) << '\n';
        }
    } else {
        body << "# " << ctx.describe() << ", w = " << join(w) << ", n = " << n << '\n';
        for (const auto& r : reports) {
            body << "theorem " << r.theorem << ": " << (r.pass ? "pass" : "FAIL") << "  " << r.detail << '\n';
            if (r.printed_form_holds) {
                body << "  printed fifth expression: " << (*r.printed_form_holds ? "holds" : "does not hold")
                     << '\n';
            }
        }
    }
    emit(body.str(), common, out);
    return all_pass ? ok : mismatch;
}

// grid

struct CheckResult {
    std::string check;
    std::string item;
    long n = -1;
    bool pass = true;
    std::string detail;
};

struct GridPoint {
    long d;
    long char_index;
    DirichletCharacter chi;
    long xi_order;
    Weights w;
    std::vector<CheckResult> results;
};

struct GridChecks {
    bool theorems = false;
    bool gf = false;
    bool invariance = false;
    bool expansion = false;
    bool reductions = false;
    bool substitution = false;
};

const std::vector<std::string> check_names{"theorems", "gf", "invariance", "expansion", "reductions", "substitution"};

GridChecks parse_checks(const std::string& text)
{
    GridChecks c;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "all") {
            c = GridChecks{true, true, true, true, true, true};
        } else if (item == "theorems") {
            c.theorems = true;
        } else if (item == "gf") {
            c.gf = true;
        } else if (item == "invariance") {
            c.invariance = true;
        } else if (item == "expansion") {
            c.expansion = true;
        } else if (item == "reductions") {
            c.reductions = true;
        } else if (item == "substitution") {
            c.substitution = true;
        } else {
            throw ParameterError("unknown check '" + item + "'");
        }
    }
    return c;
}

std::string quotient_label(Family family, int i)
{
    return to_string(family) + "^" + std::to_string(i);
}

std::vector<std::pair<Family, int>> quotient_types()
{
    std::vector<std::pair<Family, int>> types;
    for (Family f : {Family::L23, Family::L13, Family::L12}) {
        for (int i = 0; i <= (f == Family::L12 ? 1 : 3); ++i) {
            types.emplace_back(f, i);
        }
    }
    return types;
}

void run_point(GridPoint& pt, const GridChecks& checks, unsigned n_max, std::size_t trunc)
{
    const TwistContext ctx(pt.chi, static_cast<std::uint32_t>(pt.xi_order), 1);
    auto& results = pt.results;
    if (checks.theorems || checks.reductions) {
        Evaluator evaluator(ctx, pt.w);
        if (checks.theorems) {
            for (int id = 1; id <= 8; ++id) {
                for (unsigned n = 0; n <= n_max; ++n) {
                    const TheoremReport r = verify_theorem(id, evaluator, n);
                    results.push_back({"theorem", std::to_string(id), static_cast<long>(n), r.pass, r.detail});
                }
            }
        }
        if (checks.reductions) {
            for (ReductionGroup g : {ReductionGroup::BernoulliPowerSum, ReductionGroup::PowerSumOnly}) {
                for (unsigned n = 0; n <= n_max; ++n) {
                    const CheckReport r = permutation_reduction_check(g, evaluator, n);
                    results.push_back({"reduction", to_string(g), static_cast<long>(n), r.pass, r.detail});
                }
            }
        }
    }
    if (checks.gf) {
        for (long w : std::set<long>(pt.w.begin(), pt.w.end())) {
            const CheckReport r = powersum_gf_check(ctx, w, trunc);
            results.push_back({"gf", "w=" + std::to_string(w), -1, r.pass, r.detail});
        }
    }
    if (checks.invariance || checks.expansion || checks.substitution) {
        for (const auto& [family, i] : quotient_types()) {
            const QuotientSpec spec{family, i, pt.w, ctx};
            const std::string label = quotient_label(family, i);
            if (checks.substitution && family == Family::L13) {
                const CheckReport r = lambda13_substitution_check(spec, trunc);
                results.push_back({"substitution", label, -1, r.pass, r.detail});
            }
            if (!checks.invariance && !checks.expansion) {
                continue;
            }
            const auto base = quotient_series(spec, trunc);
            if (checks.invariance) {
                bool pass = true;
                std::string detail = "identical under all 6 permutations";
                for (const Weights& perm : permutations(pt.w)) {
                    const auto other = quotient_series(QuotientSpec{family, i, perm, ctx}, trunc);
                    for (std::size_t k = 0; k <= trunc && pass; ++k) {
                        if (auto diff = describe_difference(base[k], other[k])) {
                            pass = false;
                            detail = "w=" + join(perm) + ", t^" + std::to_string(k) + ": " + *diff;
                        }
                    }
                }
                results.push_back({"invariance", label, -1, pass, detail});
            }
            if (checks.expansion) {
                Evaluator evaluator = make_form_evaluator(spec);
                for (Form form : forms_for(spec)) {
                    for (unsigned n = 0; n <= n_max; ++n) {
                        const SymPoly lhs = expansion_coefficient(form, n, spec, evaluator);
                        const SymPoly rhs = base[n] * Rational(factorial(n));
                        const auto diff = describe_difference(lhs, rhs);
                        results.push_back({"expansion", to_string(form) + "/" + label, static_cast<long>(n),
                                           !diff, diff ? *diff : "matches the quotient series"});
                    }
                }
            }
        }
    }
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct GridArgs {
    std::string d_list = "1";
    std::string chars = "all";
    std::string xi_orders = "1";
    std::vector<std::string> w_list;
    unsigned n_max = 4;
    std::optional<std::size_t> trunc;
    std::string checks = "theorems,gf,invariance";
};

int cmd_grid(const GridArgs& args, const Common& common, std::ostream& out)
{
    const auto ds = sorted_unique(parse_longs(args.d_list, "d list"));
    const auto orders = sorted_unique(parse_longs(args.xi_orders, "xi order list"));
    for (long r : orders) {
        check_xi_order(r);
    }
    std::vector<Weights> ws;
    for (const std::string& entry : args.w_list) {
        std::stringstream in(entry);
        std::string triple;
        while (std::getline(in, triple, ';')) {
            ws.push_back(parse_weights(triple));
        }
    }
    if (ws.empty()) {
        throw ParameterError("empty w list");
    }
    ws = sorted_unique(ws);
    const GridChecks checks = parse_checks(args.checks);
    const std::size_t trunc = args.trunc.value_or(args.n_max + 2);
    if (checks.expansion && trunc < args.n_max) {
        throw ParameterError("--trunc must be at least --n for expansion checks");
    }
    std::optional<std::vector<long>> char_indices;
    if (args.chars != "all" && args.chars != "primitive") {
        char_indices = sorted_unique(parse_longs(args.chars, "character list"));
    }

    std::vector<GridPoint> points;
    for (long d : ds) {
        const auto chars = characters_mod(d);
        std::vector<long> selected;
        if (char_indices) {
            for (long idx : *char_indices) {
                select_character(d, idx);
                selected.push_back(idx);
            }
        } else {
            for (std::size_t i = 0; i < chars.size(); ++i) {
                if (args.chars == "all" || chars[i].is_primitive()) {
                    selected.push_back(static_cast<long>(i));
                }
            }
        }
        for (long idx : selected) {
            for (long r : orders) {
                for (const Weights& w : ws) {
                    points.push_back(GridPoint{d, idx, chars[static_cast<std::size_t>(idx)], r, w, {}});
                }
            }
        }
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (std::size_t k = next++; k < points.size(); k = next++) {
            try {
                run_point(points[k], checks, args.n_max, trunc);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(common.jobs, static_cast<unsigned>(points.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }

    std::size_t total = 0;
    std::size_t failed = 0;
    for (const auto& pt : points) {
        for (const auto& r : pt.results) {
            ++total;
            failed += r.pass ? 0 : 1;
        }
    }

    std::ostringstream body;
    if (common.format == "json") {
        Json ws_json = Json::array();
        for (const auto& w : ws) {
            ws_json.push_back(w);
        }
        std::vector<std::string> enabled;
        const bool flags[] = {checks.theorems,   checks.gf,         checks.invariance,
                              checks.expansion, checks.reductions, checks.substitution};
        for (std::size_t i = 0; i < check_names.size(); ++i) {
            if (flags[i]) {
                enabled.push_back(check_names[i]);
            }
        }
        Json grid{{"d", ds},          {"chars", args.chars}, {"xi_orders", orders}, {"w", ws_json},
                  {"n_max", args.n_max}, {"trunc", trunc},     {"checks", enabled}};
        Json pts = Json::array();
        for (const auto& pt : points) {
            Json results = Json::array();
            for (const auto& r : pt.results) {
                results.push_back(Json{{"check", r.check},
                                       {"item", r.item},
                                       {"n", r.n < 0 ? Json(nullptr) : Json(r.n)},
                                       {"verdict", r.pass ? "pass" : "fail"},
                                       {"detail", r.detail}});
            }
            pts.push_back(Json{{"d", pt.d},
                               {"char", pt.char_index},
                               {"primitive", pt.chi.is_primitive()},
                               {"xi_order", pt.xi_order},
                               {"w", pt.w},
                               {"checks", std::move(results)}});
        }
        body << dump(Json{{"grid", std::move(grid)},
                          {"points", std::move(pts)},
                          {"summary",
                           {{"points", points.size()}, {"checks", total}, {"pass", total - failed}, {"fail", failed}}}});
    } else if (common.format == "csv") {
        body << "d,char,xi_order,w,check,item,n,verdict,detail\n";
        for (const auto& pt : points) {
            for (const auto& r : pt.results) {
                body << pt.d << ',' << pt.char_index << ',' << pt.xi_order << ',' << csv_field(join(pt.w)) << ','
                     << r.check << ',' << csv_field(r.item) << ',' << (r.n < 0 ? "" : std::to_string(r.n)) << ','
                     << (r.pass ? "pass" : "fail") << ',' << csv_field(r.detail) << '\n';
            }
        }
    } else {
        for (const auto& pt : points) {
            std::size_t bad = 0;
            for (const auto& r : pt.results) {
                bad += r.pass ? 0 : 1;
            }
            body << "d=" << pt.d << " char=" << pt.char_index << (pt.chi.is_primitive() ? "" : "*")
                 << " xi_order=" << pt.xi_order << " w=" << join(pt.w) << "  " << (pt.results.size() - bad) << '/'
                 << pt.results.size() << " pass\n";
            for (const auto& r : pt.results) {
                if (!r.pass) {
                    body << "  FAIL " << r.check << ' ' << r.item;
                    if (r.n >= 0) {
                        body << " n=" << r.n;
                    }
                    body << ": " << r.detail << '\n';
                }
            }
        }
        body << "summary: " << points.size() << " points, " << total << " checks, " << (total - failed)
             << " pass, " << failed << " fail\n";
    }
    emit(body.str(), common, out);
    return failed == 0 ? ok : mismatch;
}

// padic

struct PadicArgs {
    unsigned long p = 2;
    unsigned s = 1;
    long d = 1;
    long char_index = 0;
    long xi_exp = 1;
    unsigned k = 1;
    unsigned n_max = 5;
};

int cmd_padic(const PadicArgs& args, const Common& common, std::ostream& out, std::ostream& err)
{
    DirichletCharacter chi = select_character(args.d, args.char_index);
    note_imprimitive(chi, args.char_index, err);
    const TwistContext ctx = TwistContext::ramified(std::move(chi), args.p, args.s, args.xi_exp);
    const ConvergenceReport report = convergence_check(ctx, args.k, args.n_max);
    std::ostringstream body;
    if (common.format == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < report.valuations.size(); ++i) {
            rows.push_back(Json{{"N", i + 1}, {"valuation", to_json(report.valuations[i])}});
        }
        Json params{{"p", args.p},   {"s", args.s}, {"d", args.d},          {"char", args.char_index},
                    {"xi_exp", args.xi_exp}, {"k", args.k}, {"N_max", args.n_max}};
        body << dump(Json{{"params", std::move(params)},
                          {"valuations", std::move(rows)},
                          {"verdict", report.pass ? "pass" : "fail"},
                          {"detail", report.detail}});
    } else if (common.format == "csv") {
        body << "N,valuation\n";
        for (std::size_t i = 0; i < report.valuations.size(); ++i) {
            body << i + 1 << ',' << report.valuations[i].to_string() << '\n';
        }
    } else {
        body << "# " << ctx.describe() << ", k = " << args.k << '\n';
        body << "N  v(V_N - B_k)\n";
        for (std::size_t i = 0; i < report.valuations.size(); ++i) {
            body << std::left << std::setw(3) << i + 1 << report.valuations[i].to_string() << '\n';
        }
        body << (report.pass ? "pass" : "FAIL") << ": " << report.detail << '\n';
    }
    emit(body.str(), common, out);
    return report.pass ? ok : mismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Twisted Bernoulli numbers and their symmetry identities", "tbern"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "tbern 0.1.0");

    Common common;

    long chars_d = 1;
    auto* chars = app.add_subcommand("chars", "List the Dirichlet characters mod d");
    chars->add_option("--d", chars_d, "Modulus")->required();
    add_common(chars, common);

    Selectors bern_sel;
    unsigned bern_n = 10;
    auto* bern = app.add_subcommand("bernoulli", "Table of B_{n,chi,xi}");
    add_selectors(bern, bern_sel);
    bern->add_option("--n", bern_n, "Largest index")->capture_default_str();
    add_common(bern, common);

    Selectors ver_sel;
    std::string ver_which = "all";
    std::string ver_w;
    unsigned ver_n = 4;
    auto* ver = app.add_subcommand("verify", "Verify theorems at one parameter point");
    ver->add_option("theorem", ver_which, "Theorem id 1..8, a comma list, or all")->capture_default_str();
    add_selectors(ver, ver_sel);
    ver->add_option("--w", ver_w, "w1,w2,w3")->required();
    ver->add_option("--n", ver_n, "Coefficient index")->capture_default_str();
    add_common(ver, common);

    GridArgs grid_args;
    auto* grid = app.add_subcommand("grid", "Run checks over a parameter grid");
    grid->add_option("--d", grid_args.d_list, "Moduli, comma separated")->capture_default_str();
    grid->add_option("--char", grid_args.chars, "all, primitive, or index list")->capture_default_str();
    grid->add_option("--xi-order", grid_args.xi_orders, "Orders of xi = zeta_r")->capture_default_str();
    grid->add_option("--w", grid_args.w_list, "Weight triples w1,w2,w3 (repeat or separate by ';')")->required();
    grid->add_option("--n", grid_args.n_max, "Largest coefficient index")->capture_default_str();
    grid->add_option("--trunc", grid_args.trunc, "Series truncation order [default: n+2]");
    grid->add_option("--checks", grid_args.checks,
                     "theorems,gf,invariance,expansion,reductions,substitution or all")
        ->capture_default_str();
    add_common(grid, common, true);

    PadicArgs padic_args;
    auto* padic = app.add_subcommand("padic", "Valuations of V_N - B_k in Q(zeta_{p^s})");
    padic->add_option("--p", padic_args.p, "Prime")->capture_default_str();
    padic->add_option("--s", padic_args.s, "xi has order p^s")->capture_default_str();
    padic->add_option("--d", padic_args.d, "Modulus")->capture_default_str();
    padic->add_option("--char", padic_args.char_index, "Character index (see chars)")->capture_default_str();
    padic->add_option("--xi-exp", padic_args.xi_exp, "xi = zeta_{p^s}^e")->capture_default_str();
    padic->add_option("--k", padic_args.k, "Power k")->capture_default_str();
    padic->add_option("--N-max,--n-max", padic_args.n_max, "Largest level N")->capture_default_str();
    add_common(padic, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*chars) {
            return cmd_chars(chars_d, common, out);
        }
        if (*bern) {
            return cmd_bernoulli(bern_sel, bern_n, common, out, err);
        }
        if (*ver) {
            return cmd_verify(ver_which, ver_sel, ver_w, ver_n, common, out, err);
        }
        if (*grid) {
            return cmd_grid(grid_args, common, out);
        }
        if (*padic) {
            return cmd_padic(padic_args, common, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace tbern::cli
