// ringcode CLI: ring inspection, weight tables, ball volumes, bound tables,
// code search and inequality verification, with table/JSON/CSV output.
//
// Exit codes: 0 success, 1 hypothesis-failure-only results or a violated
// inequality (the report is still emitted), 2 usage or input errors.

#include <CLI11.hpp>

#include <ringcode/ringcode.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace ringcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHypothesisFailed = 1;
constexpr int kExitError = 2;

std::size_t default_order_cap() {
    if (const char* env = std::getenv("RINGCODE_ORDER_CAP")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
    }
    return kDefaultOrderCap;
}

std::string join_indices(const std::vector<std::uint16_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string set_notation(const std::vector<std::uint16_t>& xs) { return "{" + join_indices(xs) + "}"; }

std::vector<std::uint16_t> parse_index_list(const std::string& text) {
    std::vector<std::uint16_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad index list: '" + text + "'");
        out.push_back(static_cast<std::uint16_t>(std::stoul(tok)));
    }
    if (out.empty()) throw std::invalid_argument("empty index list");
    return out;
}

std::string word_text(const Word& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out + ")";
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(output_path);
    if (!f) throw std::runtime_error("cannot write " + output_path);
    f << text;
}

// Per-subcommand option bundle. gamma, rho, d and radius are exact rationals.
struct Options {
    std::string ring_spec;
    std::string format = "table";
    std::string weight_name = "overweight";
    std::string gamma_text = "1";
    std::string d_text;
    std::string rho_text;
    std::string radius_text;
    std::string center_text;
    std::string subset_text;
    std::string import_path;
    std::string code_path;
    std::string seed_words_path;
    std::string output_path;
    std::vector<std::string> bound_names;
    std::size_t n = 1;
    long long e = -1;
    std::size_t m_param = 0;
    std::size_t n_max = 0;
    std::size_t max_n = 3;
    std::size_t max_size = 8;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultNodeBudget;
    std::uint64_t enum_cap = kDefaultEnumCap;
    std::uint64_t search_cap = kDefaultSearchCap;
    std::size_t order_cap = default_order_cap();
    unsigned workers = 1;
    bool all_bounds = false;
    bool grid = false;
    bool principal_only = false;
    bool enumerate = false;
    bool list_members = false;
    bool no_fix_zero = false;
    std::string ordering = "lex";
};

FiniteRing build_ring(const Options& opt) {
    if (opt.ring_spec.empty()) throw std::invalid_argument("--ring is required");
    return FiniteRing::from_spec(opt.ring_spec, opt.order_cap);
}

/// Resolves --weight; homogeneous weights come from the exact solver and
/// must be unique to be usable downstream.
WeightFunction resolve_weight(const FiniteRing& ring, const Options& opt) {
    if (opt.weight_name == "hamming") return WeightFunction::hamming(ring);
    if (opt.weight_name == "lee") return WeightFunction::lee(ring);
    if (opt.weight_name == "overweight") return WeightFunction::overweight(ring);
    if (opt.weight_name == "homogeneous") {
        auto sol = solve_homogeneous(ring, parse_rational(opt.gamma_text), opt.principal_only);
        if (sol.status != HomStatus::Unique)
            throw std::runtime_error("homogeneous weight unavailable on " + ring.spec_text() +
                                     ": " + sol.detail);
        return *sol.weight;
    }
    if (opt.weight_name == "custom") {
        if (opt.import_path.empty())
            throw std::invalid_argument("--weight custom requires --import FILE");
        std::ifstream f(opt.import_path);
        if (!f) throw std::runtime_error("cannot read " + opt.import_path);
        return weight_table_from_csv(ring, f);
    }
    throw std::invalid_argument("unknown weight '" + opt.weight_name + "'");
}

std::vector<Word> load_seed_words(const Options& opt, const FiniteRing& ring, std::size_t n) {
    if (opt.seed_words_path.empty()) return {};
    auto loaded = load_code_file(opt.seed_words_path, opt.order_cap);
    if (loaded.ring.spec_text() != ring.spec_text() || loaded.code.n != n)
        throw std::invalid_argument("seed words file does not match the ring/length");
    return loaded.code.words;
}

// ---- subcommand runners ----

int run_ring(const Options& opt) {
    FiniteRing ring = build_ring(opt);
    const auto& loc = ring.locality();
    if (opt.format == "json") {
        Json j;
        j["spec"] = ring.spec_text();
        j["order"] = ring.order();
        j["zero"] = ring.zero();
        j["one"] = ring.one();
        j["labels"] = ring.labels();
        j["units"] = ring.units();
        j["u"] = ring.unit_count();
        j["v"] = ring.nonzero_nonunit_count();
        j["left_ideals"] = ring.left_ideals();
        j["associate_classes"] = ring.associate_classes();
        Json l;
        l["is_local"] = loc.is_local;
        if (loc.is_local) {
            l["maximal_ideal"] = loc.maximal_ideal;
            l["q"] = loc.residue_field_order;
        }
        j["locality"] = std::move(l);
        emit(j.dump(2) + "\n", opt.output_path);
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"spec", ring.spec_text()});
    rows.push_back({"order", std::to_string(ring.order())});
    std::string labels;
    for (std::size_t i = 0; i < ring.order(); ++i) {
        if (i) labels += ' ';
        labels += ring.label(static_cast<std::uint16_t>(i));
    }
    rows.push_back({"labels", labels});
    rows.push_back({"units", set_notation(ring.units()) + "  (u=" + std::to_string(ring.unit_count()) +
                                 ", v=" + std::to_string(ring.nonzero_nonunit_count()) + ")"});
    std::string ideals;
    for (const auto& ideal : ring.left_ideals()) ideals += set_notation(ideal) + " ";
    rows.push_back({"left ideals", ideals});
    std::string classes;
    for (const auto& cls : ring.associate_classes()) classes += set_notation(cls) + " ";
    rows.push_back({"classes", classes});
    if (loc.is_local)
        rows.push_back({"local", "yes  J=" + set_notation(loc.maximal_ideal) +
                                     "  q=" + std::to_string(loc.residue_field_order)});
    else
        rows.push_back({"local", "no"});
    emit(render_table(rows), opt.output_path);
    return kExitOk;
}

int run_weights(const Options& opt) {
    FiniteRing ring = build_ring(opt);
    const Rat gamma = parse_rational(opt.gamma_text);

    if (opt.weight_name == "homogeneous") {
        auto sol = solve_homogeneous(ring, gamma, opt.principal_only);
        if (sol.status != HomStatus::Unique) {
            if (opt.format == "json") {
                Json j;
                j["ring"] = ring.spec_text();
                j["weight"] = "homogeneous";
                j["gamma"] = rat_to_string(gamma);
                j["status"] = sol.status == HomStatus::NoSolution ? "no-solution" : "underdetermined";
                if (sol.status == HomStatus::Underdetermined) j["solution_dim"] = sol.solution_dim;
                j["detail"] = sol.detail;
                emit(j.dump(2) + "\n", opt.output_path);
            } else {
                emit("homogeneous weight on " + ring.spec_text() + ": " + sol.detail + "\n",
                     opt.output_path);
            }
            return kExitHypothesisFailed;
        }
    }

    WeightFunction w = resolve_weight(ring, opt);
    if (opt.format == "csv") {
        emit(weight_table_csv(w), opt.output_path);
        return kExitOk;
    }
    if (opt.format == "json") {
        Json j;
        j["ring"] = ring.spec_text();
        j["weight"] = w.name();
        j["gamma"] = rat_to_string(w.gamma());
        j["max_element_weight"] = rat_to_string(w.max_element_weight());
        Json table = Json::array();
        for (std::size_t x = 0; x < ring.order(); ++x) {
            Json row;
            row["index"] = x;
            row["label"] = ring.label(static_cast<std::uint16_t>(x));
            row["weight"] = rat_to_string(w.weight(static_cast<std::uint16_t>(x)));
            table.push_back(std::move(row));
        }
        j["table"] = std::move(table);
        emit(j.dump(2) + "\n", opt.output_path);
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows = {{"index", "label", "weight"}};
    for (std::size_t x = 0; x < ring.order(); ++x)
        rows.push_back({std::to_string(x), ring.label(static_cast<std::uint16_t>(x)),
                        rat_to_string(w.weight(static_cast<std::uint16_t>(x)))});
    emit(render_table(rows), opt.output_path);
    return kExitOk;
}

int run_ball(const Options& opt) {
    FiniteRing ring = build_ring(opt);
    if (opt.enumerate || !opt.center_text.empty() || !opt.radius_text.empty()) {
        if (opt.center_text.empty() || opt.radius_text.empty())
            throw std::invalid_argument("enumeration needs both --center and --radius");
        WeightFunction w = resolve_weight(ring, opt);
        Word center = parse_index_list(opt.center_text);
        for (std::uint16_t x : center)
            if (x >= ring.order()) throw std::invalid_argument("center index out of range");
        const Rat radius = parse_rational(opt.radius_text);
        auto members = ball_enumerate({center, radius, &w}, opt.enum_cap);
        if (opt.format == "json") {
            Json j;
            j["ring"] = ring.spec_text();
            j["weight"] = w.name();
            j["center"] = center;
            j["radius"] = rat_to_string(radius);
            j["volume"] = members.size();
            if (opt.list_members) {
                Json ws = Json::array();
                for (const Word& m : members) ws.push_back(m);
                j["members"] = std::move(ws);
            }
            emit(j.dump(2) + "\n", opt.output_path);
        } else {
            std::string out = "ball of radius " + rat_to_string(radius) + " around " +
                              word_text(center) + " under " + w.name() + ": " +
                              std::to_string(members.size()) + " words\n";
            if (opt.list_members)
                for (const Word& m : members) out += "  " + word_text(m) + "\n";
            emit(out, opt.output_path);
        }
        return kExitOk;
    }

    if (opt.e < 0) throw std::invalid_argument("formula mode needs -e (or use --center/--radius)");
    if (opt.weight_name != "overweight")
        throw std::invalid_argument("the closed-form volume is for the overweight; "
                                    "use --center/--radius enumeration for other weights");
    const long long top = std::min<long long>(opt.e, 2 * static_cast<long long>(opt.n));
    if (opt.format == "json") {
        Json j;
        j["ring"] = ring.spec_text();
        j["n"] = opt.n;
        j["e"] = opt.e;
        Json spheres = Json::array();
        for (long long t = 0; t <= top; ++t)
            spheres.push_back(sphere_size_overweight(ring, opt.n, t).str());
        j["sphere_sizes"] = std::move(spheres);
        j["volume"] = ball_volume_overweight(ring, opt.n, opt.e).str();
        j["space"] = space_size(ring, opt.n).str();
        emit(j.dump(2) + "\n", opt.output_path);
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows = {{"t", "sphere", "ball"}};
    BigInt cum = 0;
    for (long long t = 0; t <= top; ++t) {
        const BigInt s = sphere_size_overweight(ring, opt.n, t);
        cum += s;
        rows.push_back({std::to_string(t), s.str(), cum.str()});
    }
    std::string out = render_table(rows);
    out += "volume |B_" + std::to_string(opt.e) + "| = " +
           ball_volume_overweight(ring, opt.n, opt.e).str() + " of |R|^n = " +
           space_size(ring, opt.n).str() + "\n";
    emit(out, opt.output_path);
    return kExitOk;
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

int run_bounds(const Options& opt) {
    FiniteRing ring = build_ring(opt);
    const Rat gamma = parse_rational(opt.gamma_text);

    auto known = [&](const std::string& name) {
        return std::find(opt.bound_names.begin(), opt.bound_names.end(), name) !=
               opt.bound_names.end();
    };

    if (opt.grid) {
        if (opt.bound_names.size() != 1)
            throw std::invalid_argument("--grid needs exactly one --bound NAME");
        if (opt.n_max == 0) throw std::invalid_argument("--grid needs --n-max");
        const std::string& name = opt.bound_names.front();
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header = {"n\\d"};
        for (std::size_t d = 1; d <= 2 * opt.n_max; ++d) header.push_back(std::to_string(d));
        rows.push_back(header);
        for (std::size_t n = 1; n <= opt.n_max; ++n) {
            std::vector<std::string> row = {std::to_string(n)};
            for (std::size_t d = 1; d <= 2 * opt.n_max; ++d) {
                if (d > 2 * n) {
                    row.push_back("");
                    continue;
                }
                BoundReport r;
                if (name == "sphere-packing")
                    r = sphere_packing_overweight(ring, n, d);
                else if (name == "gv")
                    r = gilbert_varshamov_overweight(ring, n, d);
                else if (name == "plotkin-overweight")
                    r = plotkin_overweight(ring, n, d);
                else if (name == "plotkin-homogeneous")
                    r = plotkin_homogeneous(gamma, n, Rat(d));
                else
                    throw std::invalid_argument("--grid does not support bound '" + name + "'");
                row.push_back(r.applicable ? r.integer_bound->str() : "n/a");
            }
            rows.push_back(row);
        }
        emit(render_table(rows), opt.output_path);
        return kExitOk;
    }

    if (opt.d_text.empty() && opt.m_param == 0)
        throw std::invalid_argument("bounds needs -d (or -M for the distance corollary)");

    std::vector<BoundReport> reports;
    const bool all = opt.all_bounds || opt.bound_names.empty();
    if (!opt.d_text.empty()) {
        const Rat d = parse_rational(opt.d_text);
        const bool integral = is_integer(d) && d >= 1;
        const long long di = integral ? d.convert_to<long long>() : -1;
        if ((all && integral) || known("sphere-packing"))
            reports.push_back(sphere_packing_overweight(ring, opt.n, di));
        if ((all && integral && di <= 2 * static_cast<long long>(opt.n)) || known("gv"))
            reports.push_back(gilbert_varshamov_overweight(ring, opt.n, di));
        if ((all && integral) || known("plotkin-overweight"))
            reports.push_back(plotkin_overweight(ring, opt.n, di));
        if (all || known("plotkin-homogeneous"))
            reports.push_back(plotkin_homogeneous(gamma, opt.n, d));
        if ((all && ring.nonzero_nonunit_count() == 0) || known("plotkin-field"))
            reports.push_back(plotkin_field(ring.order(), opt.n,
                                            integral ? static_cast<std::size_t>(di) : 0));
        if ((all && !opt.rho_text.empty()) || known("johnson"))
            reports.push_back(
                johnson_homogeneous(opt.n, d, gamma, parse_rational(opt.rho_text.empty()
                                                                        ? "0"
                                                                        : opt.rho_text)));
    }
    if (opt.m_param > 0 || known("plotkin-distance"))
        reports.push_back(plotkin_distance_corollary(ring, opt.n, opt.m_param));

    if (reports.empty()) throw std::invalid_argument("no bound selected");

    if (opt.format == "json") {
        Json j = Json::array();
        for (const auto& r : reports) j.push_back(bound_report_json(r));
        emit(j.dump(2) + "\n", opt.output_path);
    } else {
        std::vector<std::vector<std::string>> rows = {
            {"bound", "applicable", "value", "integer", "note"}};
        for (const auto& r : reports) {
            rows.push_back({r.name, r.applicable ? "yes" : "no",
                            r.applicable ? rat_to_string(*r.value) : "",
                            r.applicable ? r.integer_bound->str() : "",
                            r.applicable ? r.note : "n/a (" + r.reason + ")"});
        }
        emit(render_table(rows), opt.output_path);
    }
    const bool any_applicable =
        std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.applicable; });
    return any_applicable ? kExitOk : kExitHypothesisFailed;
}

int run_search(const Options& opt, bool maximize) {
    FiniteRing ring = build_ring(opt);
    WeightFunction w = resolve_weight(ring, opt);
    if (opt.d_text.empty()) throw std::invalid_argument("search needs -d");
    const Rat d = parse_rational(opt.d_text);
    std::vector<Word> seeds = load_seed_words(opt, ring, opt.n);

    SearchResult result;
    if (maximize) {
        result = max_code(ring, opt.n, d, w, opt.budget, !opt.no_fix_zero, std::move(seeds),
                          opt.search_cap);
    } else {
        const WordOrdering ord =
            opt.ordering == "weight-lex" ? WordOrdering::WeightLex : WordOrdering::Lex;
        if (opt.ordering != "lex" && opt.ordering != "weight-lex")
            throw std::invalid_argument("unknown ordering '" + opt.ordering + "'");
        result = greedy_gv(ring, opt.n, d, w, ord, std::move(seeds), opt.enum_cap);
    }
    std::cerr << "search finished in " << result.wall_seconds << "s\n";

    auto dist = min_distance(result.code, w);
    Json report = search_report_json(result);
    report["min_distance"] = dist ? Json(rat_to_string(*dist)) : Json(nullptr);

    if (!opt.output_path.empty()) {
        save_code_file(result.code, opt.output_path);
        std::ofstream side(opt.output_path + ".report.json");
        if (!side) throw std::runtime_error("cannot write " + opt.output_path + ".report.json");
        side << report.dump(2) << '\n';
    }

    if (opt.format == "json") {
        Json j;
        j["report"] = report;
        j["code"] = code_to_json(result.code);
        std::cout << j.dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"size", std::to_string(result.code.size())});
        rows.push_back({"certified_optimal", result.certified_optimal ? "yes" : "no"});
        rows.push_back({"nodes_explored", std::to_string(result.nodes_explored)});
        rows.push_back({"ordering", result.ordering});
        rows.push_back({"min_distance", dist ? rat_to_string(*dist) : "undefined (singleton)"});
        if (result.gv_guarantee)
            rows.push_back({"gv_guarantee", result.gv_guarantee->str()});
        std::cout << render_table(rows);
    }
    return kExitOk;
}

int emit_check(const CheckReport& r, const Options& opt) {
    if (opt.format == "json")
        emit(check_report_json(r).dump(2) + "\n", opt.output_path);
    else
        emit(r.summary() + "\n", opt.output_path);
    if (!r.applicable) return kExitHypothesisFailed;
    return r.pass ? kExitOk : kExitHypothesisFailed;
}

int emit_summary(const TrialSummary& s, const Options& opt) {
    if (opt.format == "json") {
        emit(trial_summary_json(s).dump(2) + "\n", opt.output_path);
    } else {
        std::string line = s.name + ": " + std::to_string(s.checked) + " checked, " +
                           std::to_string(s.passed) + " passed, " +
                           std::to_string(s.violations) + " violations, " +
                           std::to_string(s.skipped) + " skipped";
        if (s.first_violation) line += " (first violation at trial " +
                                       std::to_string(*s.first_violation) + ")";
        emit(line + "\n", opt.output_path);
    }
    return s.all_pass() ? kExitOk : kExitHypothesisFailed;
}

Code load_code_checked(const Options& opt, FiniteRing& ring_out) {
    if (opt.code_path.empty()) throw std::invalid_argument("--code FILE is required");
    auto loaded = load_code_file(opt.code_path, opt.order_cap);
    if (loaded.had_duplicates)
        std::cerr << "warning: duplicate words in " << opt.code_path << " were dropped\n";
    ring_out = std::move(loaded.ring);
    Code code = std::move(loaded.code);
    code.ring = &ring_out;
    return code;
}

int run_verify_probineq(const Options& opt) {
    FiniteRing ring = build_ring(opt);
    return emit_summary(probineq_trials(ring, opt.trials, opt.seed, opt.workers), opt);
}

int run_verify_pairsum(const Options& opt) {
    if (!opt.code_path.empty()) {
        FiniteRing ring = FiniteRing::from_spec("Z2");
        Code code = load_code_checked(opt, ring);
        return emit_check(check_pair_sum(code), opt);
    }
    FiniteRing ring = build_ring(opt);
    return emit_summary(
        pair_sum_trials(ring, opt.max_n, opt.max_size, opt.trials, opt.seed, opt.workers), opt);
}

int run_verify_maxwt(const Options& opt) {
    const Rat gamma = parse_rational(opt.gamma_text);
    if (!opt.code_path.empty()) {
        FiniteRing ring = FiniteRing::from_spec("Z2");
        Code code = load_code_checked(opt, ring);
        auto sol = solve_homogeneous(ring, gamma, opt.principal_only);
        if (sol.status != HomStatus::Unique) {
            CheckReport r;
            r.name = "maxwt";
            r.applicable = false;
            r.reason = "homogeneous weight unavailable";
            return emit_check(r, opt);
        }
        return emit_check(check_maxwt(code, *sol.weight, gamma), opt);
    }
    FiniteRing ring = build_ring(opt);
    return emit_summary(
        maxwt_trials(ring, gamma, opt.max_n, opt.max_size, opt.trials, opt.seed, opt.workers),
        opt);
}

int run_verify_johnson(const Options& opt) {
    const Rat gamma = parse_rational(opt.gamma_text);
    const Rat rho = parse_rational(opt.rho_text.empty() ? "0" : opt.rho_text);
    FiniteRing ring = FiniteRing::from_spec("Z2");
    Code code = load_code_checked(opt, ring);
    auto sol = solve_homogeneous(ring, gamma, opt.principal_only);
    if (sol.status != HomStatus::Unique)
        throw std::runtime_error("homogeneous weight unavailable on " + ring.spec_text());
    auto report = verify_johnson(code, *sol.weight, gamma, rho, opt.enum_cap);
    if (opt.format == "json") {
        Json j;
        j["bound"] = bound_report_json(report.bound);
        j["min_distance"] = report.min_dist ? Json(rat_to_string(*report.min_dist)) : Json(nullptr);
        j["applicable"] = report.applicable;
        j["profile_max"] = report.profile_max;
        j["witness"] = report.witness;
        j["status"] = !report.applicable ? "not-applicable" : (report.pass ? "pass" : "violated");
        emit(j.dump(2) + "\n", opt.output_path);
    } else {
        emit(report.summary() + "\n", opt.output_path);
    }
    if (!report.applicable) return kExitHypothesisFailed;
    return report.pass ? kExitOk : kExitHypothesisFailed;
}

int run_verify_hamming(const Options& opt) {
    FiniteRing ring = build_ring(opt);
    std::vector<std::uint16_t> subset;
    if (opt.subset_text.empty()) {
        subset.resize(ring.order());
        for (std::size_t i = 0; i < subset.size(); ++i) subset[i] = static_cast<std::uint16_t>(i);
    } else {
        subset = parse_index_list(opt.subset_text);
        for (std::uint16_t x : subset)
            if (x >= ring.order()) throw std::invalid_argument("subset index out of range");
    }
    int worst = kExitOk;
    // uniform first, then seeded random distributions on the subset
    auto uni = check_hamming_average(ring, subset, Distribution::uniform(ring, subset));
    worst = std::max(worst, emit_check(uni, opt));
    for (std::size_t t = 0; t < opt.trials; ++t) {
        std::mt19937_64 rng(derive_seed(opt.seed, t));
        auto rep = check_hamming_average(ring, subset, Distribution::random_on(ring, subset, rng));
        if (!rep.pass) {
            worst = std::max(worst, emit_check(rep, opt));
            return worst;
        }
    }
    std::cout << "random trials: " << opt.trials << " passed\n";
    return worst;
}

int run_verify_triangle(const Options& opt) {
    FiniteRing ring = build_ring(opt);
    WeightFunction w = resolve_weight(ring, opt);
    auto bad = triangle_violation(w);
    if (opt.format == "json") {
        Json j;
        j["ring"] = ring.spec_text();
        j["weight"] = w.name();
        j["holds"] = !bad.has_value();
        if (bad) j["counterexample"] = {bad->first, bad->second};
        emit(j.dump(2) + "\n", opt.output_path);
    } else if (bad) {
        emit("triangle inequality VIOLATED at (" + std::to_string(bad->first) + ", " +
                 std::to_string(bad->second) + "): w(x+y) > w(x)+w(y)\n",
             opt.output_path);
    } else {
        emit("triangle inequality holds\n", opt.output_path);
    }
    return bad ? kExitHypothesisFailed : kExitOk;
}

void add_common(CLI::App* cmd, Options& opt, bool needs_ring) {
    if (needs_ring) cmd->add_option("--ring", opt.ring_spec, "ring spec, e.g. Z4, GF(8), Z2xZ4");
    cmd->add_option("--format", opt.format, "table | json | csv")->default_str("table");
    cmd->add_option("--order-cap", opt.order_cap, "ring order cap (env RINGCODE_ORDER_CAP)");
    cmd->add_option("--output,-o", opt.output_path, "write the result to a file");
}

void add_weight_opts(CLI::App* cmd, Options& opt) {
    cmd->add_option("--weight", opt.weight_name,
                    "hamming | lee | overweight | homogeneous | custom");
    cmd->add_flag_callback("--hamming", [&opt] { opt.weight_name = "hamming"; });
    cmd->add_flag_callback("--lee", [&opt] { opt.weight_name = "lee"; });
    cmd->add_flag_callback("--overweight", [&opt] { opt.weight_name = "overweight"; });
    cmd->add_flag_callback("--homogeneous", [&opt] { opt.weight_name = "homogeneous"; });
    cmd->add_option("--gamma", opt.gamma_text, "homogeneous average value (rational)");
    cmd->add_flag("--principal-only", opt.principal_only,
                  "constrain the homogeneous solve to principal ideals");
    cmd->add_option("--import", opt.import_path, "CSV weight table for --weight custom");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring coding bounds toolkit"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* ring_cmd = app.add_subcommand("ring", "inspect a ring's structure");
    add_common(ring_cmd, opt, true);

    CLI::App* weights_cmd = app.add_subcommand("weights", "emit a weight table");
    add_common(weights_cmd, opt, true);
    add_weight_opts(weights_cmd, opt);

    CLI::App* ball_cmd = app.add_subcommand("ball", "sphere sizes and ball volumes");
    add_common(ball_cmd, opt, true);
    add_weight_opts(ball_cmd, opt);
    ball_cmd->add_option("-n", opt.n, "word length");
    ball_cmd->add_option("-e", opt.e, "integer radius for the closed form");
    ball_cmd->add_option("--center", opt.center_text, "center word, e.g. 0,1,2");
    ball_cmd->add_option("--radius", opt.radius_text, "rational radius for enumeration");
    ball_cmd->add_flag("--enumerate", opt.enumerate, "force enumeration mode");
    ball_cmd->add_flag("--list", opt.list_members, "list the ball members");
    ball_cmd->add_option("--enum-cap", opt.enum_cap, "enumeration cap on |R|^n");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate code bounds");
    add_common(bounds_cmd, opt, true);
    bounds_cmd->add_option("-n", opt.n, "word length");
    bounds_cmd->add_option("-d", opt.d_text, "minimum distance (rational)");
    bounds_cmd->add_option("-M", opt.m_param, "code size for the distance corollary");
    bounds_cmd->add_option("--gamma", opt.gamma_text, "homogeneous average value");
    bounds_cmd->add_option("--rho", opt.rho_text, "list-decoding radius fraction");
    bounds_cmd->add_flag("--all", opt.all_bounds, "evaluate every applicable bound");
    bounds_cmd->add_option("--bound", opt.bound_names,
                           "sphere-packing | gv | plotkin-overweight | plotkin-homogeneous | "
                           "plotkin-field | plotkin-distance | johnson");
    bounds_cmd->add_flag("--grid", opt.grid, "render an (n, d) grid for one bound");
    bounds_cmd->add_option("--n-max", opt.n_max, "largest n in --grid mode");

    CLI::App* search_cmd = app.add_subcommand("search", "construct codes");
    search_cmd->require_subcommand(1);
    CLI::App* search_max = search_cmd->add_subcommand("max", "certified maximum code search");
    CLI::App* search_greedy = search_cmd->add_subcommand("greedy", "greedy GV construction");
    for (CLI::App* sc : {search_max, search_greedy}) {
        add_common(sc, opt, true);
        add_weight_opts(sc, opt);
        sc->add_option("-n", opt.n, "word length");
        sc->add_option("-d", opt.d_text, "required minimum distance (rational)");
        sc->add_option("--seed-words", opt.seed_words_path, "code file with words to extend");
    }
    search_max->add_option("--budget", opt.budget, "node budget (0 = unlimited)");
    search_max->add_flag("--no-fix-zero", opt.no_fix_zero,
                         "do not fix the zero word in the searched code");
    search_max->add_option("--search-cap", opt.search_cap, "vertex cap on |R|^n");
    search_greedy->add_option("--ordering", opt.ordering, "lex | weight-lex");
    search_greedy->add_option("--enum-cap", opt.enum_cap, "enumeration cap on |R|^n");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check the toolkit's inequalities");
    verify_cmd->require_subcommand(1);
    CLI::App* v_probineq = verify_cmd->add_subcommand(
        "probineq", "distribution inequality sum W(x-y)P(x)P(y) <= eta");
    CLI::App* v_pairsum =
        verify_cmd->add_subcommand("pairsum", "M(M-1)d <= sum D <= M^2 n eta");
    CLI::App* v_maxwt =
        verify_cmd->add_subcommand("maxwt", "max-weight pair-sum inequality (homogeneous)");
    CLI::App* v_johnson =
        verify_cmd->add_subcommand("johnson", "list profile against the Johnson bound");
    CLI::App* v_hamming =
        verify_cmd->add_subcommand("hamming", "Hamming average inequality on a subset");
    CLI::App* v_triangle = verify_cmd->add_subcommand("triangle", "triangle inequality check");

    for (CLI::App* sc : {v_probineq, v_pairsum, v_maxwt, v_hamming}) {
        add_common(sc, opt, true);
        sc->add_option("--trials", opt.trials, "number of random trials");
        sc->add_option("--seed", opt.seed, "master seed");
        sc->add_option("--workers", opt.workers, "worker threads (result-invariant)");
    }
    v_pairsum->add_option("--code", opt.code_path, "check one code file instead");
    v_pairsum->add_option("--max-n", opt.max_n, "max random code length");
    v_pairsum->add_option("--max-size", opt.max_size, "max random code size");
    v_maxwt->add_option("--code", opt.code_path, "check one code file instead");
    v_maxwt->add_option("--max-n", opt.max_n, "max random code length");
    v_maxwt->add_option("--max-size", opt.max_size, "max random code size");
    v_maxwt->add_option("--gamma", opt.gamma_text, "homogeneous average value");
    v_maxwt->add_flag("--principal-only", opt.principal_only,
                      "principal-ideal homogeneous constraints");
    add_common(v_johnson, opt, false);
    v_johnson->add_option("--code", opt.code_path, "code file to profile")->required();
    v_johnson->add_option("--gamma", opt.gamma_text, "homogeneous average value");
    v_johnson->add_option("--rho", opt.rho_text, "list-decoding radius fraction");
    v_johnson->add_option("--enum-cap", opt.enum_cap, "enumeration cap on |R|^n");
    v_hamming->add_option("--subset", opt.subset_text, "subset I as an index list, e.g. 0,2");
    add_common(v_triangle, opt, true);
    add_weight_opts(v_triangle, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(ring_cmd)) return run_ring(opt);
        if (app.got_subcommand(weights_cmd)) return run_weights(opt);
        if (app.got_subcommand(ball_cmd)) return run_ball(opt);
        if (app.got_subcommand(bounds_cmd)) return run_bounds(opt);
        if (app.got_subcommand(search_cmd))
            return run_search(opt, search_cmd->got_subcommand(search_max));
        if (app.got_subcommand(verify_cmd)) {
            if (verify_cmd->got_subcommand(v_probineq)) return run_verify_probineq(opt);
            if (verify_cmd->got_subcommand(v_pairsum)) return run_verify_pairsum(opt);
            if (verify_cmd->got_subcommand(v_maxwt)) return run_verify_maxwt(opt);
            if (verify_cmd->got_subcommand(v_johnson)) return run_verify_johnson(opt);
            if (verify_cmd->got_subcommand(v_hamming)) return run_verify_hamming(opt);
            if (verify_cmd->got_subcommand(v_triangle)) return run_verify_triangle(opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitError;
}
