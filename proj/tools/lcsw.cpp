// lcsw.cpp -- command-line front end: construct, lcs, match, scan, gamma
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcsw/construct.hpp"
#include "lcsw/gamma.hpp"
#include "lcsw/lcs.hpp"
#include "lcsw/matcher.hpp"
#include "lcsw/oracle.hpp"
#include "lcsw/version.hpp"
#include "lcsw/word.hpp"

namespace {

using nlohmann::ordered_json;

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

std::int64_t env_budget() {
    const char* raw = std::getenv("LCSW_BUDGET");
    if (!raw) return lcsw::kDefaultBudget;
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || v <= 0)
        throw std::invalid_argument("LCSW_BUDGET must be a positive integer");
    return static_cast<std::int64_t>(v);
}

lcsw::WordFileData load_words(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open word file '" + path + "'");
    return lcsw::read_words(in);
}

void emit(const ordered_json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << report.dump(2) << '\n';
}

void emit_csv(const std::string& path, const std::string& header,
              const std::vector<std::string>& rows) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << header << '\n';
    for (const std::string& row : rows) out << row << '\n';
}

ordered_json envelope(const std::string& command) {
    ordered_json j;
    j["tool"] = std::string(lcsw::kToolName);
    j["version"] = std::string(lcsw::kVersion);
    j["command"] = command;
    return j;
}

int run_construct(std::int64_t n, std::int64_t k, std::int64_t r,
                  const std::string& mode, const std::string& out_path,
                  const std::string& csv_path) {
    std::vector<lcsw::Word> family;
    std::vector<std::int64_t> m_list;
    if (mode == "main") {
        for (std::int64_t i = 0; i <= r; ++i)
            m_list.push_back(lcsw::scale_m(n, k, r, i).m);
        family = lcsw::build_family_main(n, k, r);
    } else if (mode == "unary") {
        family = lcsw::build_baseline_family(n, k, lcsw::BaselineMode::unary);
    } else {
        family = lcsw::build_baseline_family(n, k, lcsw::BaselineMode::k_plus_1);
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    lcsw::write_words(out, family, lcsw::family_header(n, k, r, mode, m_list));

    ordered_json j = envelope("construct");
    j["params"] = {{"n", n}, {"k", k}, {"r", r}, {"mode", mode}, {"out", out_path}};
    j["family_size"] = family.size();
    j["m"] = m_list;
    if (mode == "main") {
        const auto [upper, lower] = lcsw::bound_values(n, k, r, 0.0);
        (void)lower;
        j["reference"] = {{"upper_bound", round3(upper.value)},
                          {"trivial_floor", round3(static_cast<double>(n) / k)}};
    }
    std::cout << j.dump(2) << '\n';

    std::vector<std::string> rows;
    for (std::size_t i = 0; i < family.size(); ++i)
        rows.push_back(std::to_string(i) + "," + std::to_string(family[i].size()) +
                       "," + std::to_string(k));
    emit_csv(csv_path, "index,length,k", rows);
    return 0;
}

int run_lcs(const std::string& family_path, const std::string& a_path,
            const std::string& b_path, bool with_witness,
            const std::string& out_path, const std::string& csv_path) {
    std::vector<lcsw::Word> words;
    std::map<std::string, std::string> meta;
    if (!family_path.empty()) {
        lcsw::WordFileData data = load_words(family_path);
        words = std::move(data.words);
        meta = std::move(data.meta);
    } else {
        lcsw::WordFileData fa = load_words(a_path);
        lcsw::WordFileData fb = load_words(b_path);
        if (fa.words.empty() || fb.words.empty())
            throw std::invalid_argument("input files must hold at least one word");
        const lcsw::Symbol k = std::max(fa.alphabet_size, fb.alphabet_size);
        words.push_back(lcsw::make_word(fa.words[0].symbols, k));
        words.push_back(lcsw::make_word(fb.words[0].symbols, k));
    }
    if (words.size() < 2)
        throw std::invalid_argument("need at least two words");

    const std::vector<std::int64_t> matrix = lcsw::pairwise_lcs_matrix(words);
    const lcsw::FamilyLcsResult res = lcsw::family_lcs(words);

    ordered_json j = envelope("lcs");
    j["params"] = {{"family", family_path}, {"a", a_path}, {"b", b_path},
                   {"witness", with_witness}};
    j["words"] = words.size();
    j["k"] = words[0].alphabet_size;
    ordered_json pairs = ordered_json::array();
    std::vector<std::string> rows;
    std::size_t p = 0;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t q = i + 1; q < words.size(); ++q, ++p) {
            pairs.push_back({{"i", i}, {"j", q}, {"length", matrix[p]}});
            rows.push_back(std::to_string(i) + "," + std::to_string(q) + "," +
                           std::to_string(matrix[p]));
        }
    j["pairs"] = std::move(pairs);
    j["family_lcs"] = {{"length", res.length}, {"i", res.i}, {"j", res.j}};
    if (with_witness) {
        j["family_lcs"]["witness"] = {{"common", lcsw::format_word(res.witness.common)},
                                      {"indices_a", res.witness.idx_a},
                                      {"indices_b", res.witness.idx_b}};
    }
    // constructed families carry their parameters; report the formula value
    // next to the achieved one
    if (meta.count("n") && meta.count("k") && meta.count("r") &&
        meta.count("mode") && meta.at("mode") == "main") {
        const auto [upper, lower] =
            lcsw::bound_values(std::stoll(meta.at("n")), std::stoll(meta.at("k")),
                               std::stoll(meta.at("r")), 0.0);
        (void)lower;
        j["reference"] = {{"upper_bound", round3(upper.value)}};
    }
    emit(j, out_path);
    emit_csv(csv_path, "i,j,length", rows);
    return 0;
}

int run_match(const std::string& family_path, int r, std::optional<double> alpha,
              std::optional<double> beta, const std::string& shift,
              std::int64_t samples, std::uint64_t seed, const std::string& out_path,
              const std::string& csv_path) {
    lcsw::WordFileData data = load_words(family_path);
    std::vector<lcsw::Word> words = std::move(data.words);
    ordered_json reduction = {{"applied", false}};
    if (data.alphabet_size > 2) {
        // project onto the two letters with the most balanced counts
        const lcsw::Symbol k = data.alphabet_size;
        lcsw::Symbol best_a = 0, best_b = 1;
        std::int64_t best_gap = -1;
        for (lcsw::Symbol a = 0; a < k; ++a)
            for (lcsw::Symbol b = a + 1; b < k; ++b) {
                std::int64_t gap = 0;
                for (const lcsw::Word& w : words)
                    gap += std::abs(lcsw::count_symbol(w, a) - lcsw::count_symbol(w, b));
                if (best_gap < 0 || gap < best_gap) {
                    best_gap = gap;
                    best_a = a;
                    best_b = b;
                }
            }
        std::vector<lcsw::Word> projected;
        for (const lcsw::Word& w : words) {
            const std::vector<lcsw::Symbol> keep{best_a, best_b};
            const lcsw::Word p = lcsw::project(w, keep);
            lcsw::Word binary{{}, 2};
            for (lcsw::Symbol s : p.symbols)
                binary.symbols.push_back(s == best_a ? 0 : 1);
            projected.push_back(std::move(binary));
        }
        words = std::move(projected);
        reduction = {{"applied", true}, {"letters", {best_a, best_b}}};
    }

    lcsw::MatcherParams params = lcsw::MatcherParams::defaults(r);
    if (alpha) params.alpha_eff = *alpha;
    if (beta) params.beta_eff = *beta;
    params.shift = shift == "sampled" ? lcsw::ShiftStrategy::sampled
                                      : lcsw::ShiftStrategy::exhaustive;
    params.shift_samples = samples;
    params.seed = seed;

    const lcsw::MatcherReport report = lcsw::run_matcher(words, params);
    ordered_json j = lcsw::matcher_report_to_json(report);
    j["params"]["family"] = family_path;
    j["params"]["reduction"] = std::move(reduction);
    emit(j, out_path);
    emit_csv(csv_path, "i,j,length,Q,lambda",
             {std::to_string(report.chosen_pair.first) + "," +
              std::to_string(report.chosen_pair.second) + "," +
              std::to_string(report.witness.length()) + "," + std::to_string(report.q) +
              "," + std::to_string(report.lambda)});
    return 0;
}

int run_scan(const std::string& mode, std::int64_t n, std::int64_t k, std::int64_t t,
             bool multiset, const std::string& out_path, const std::string& csv_path) {
    lcsw::FamilySpace space;
    space.n = n;
    space.k = static_cast<lcsw::Symbol>(k);
    space.t = t;
    space.universe =
        mode == "balanced" ? lcsw::Universe::balanced_only : lcsw::Universe::all_words;
    const lcsw::MinFamilyResult res =
        lcsw::min_family_lcs(space, !multiset, env_budget());

    ordered_json j = envelope("scan");
    j["params"] = {{"mode", mode}, {"n", n},    {"k", k},
                   {"t", t},       {"multiset", multiset}, {"budget", env_budget()}};
    j["min"] = res.value;
    ordered_json family = ordered_json::array();
    for (const lcsw::Word& w : res.family) family.push_back(lcsw::format_word(w));
    j["family"] = std::move(family);
    j["indices"] = res.indices;
    emit(j, out_path);
    emit_csv(csv_path, "min", {std::to_string(res.value)});
    return 0;
}

int run_gamma(std::int64_t k, std::int64_t n, std::int64_t samples, std::uint64_t seed,
              const std::string& out_path, const std::string& csv_path) {
    const lcsw::GammaEstimate est = lcsw::estimate_gamma(k, n, samples, seed);
    ordered_json j = envelope("gamma");
    j["params"] = {{"k", k}, {"n", n}, {"samples", samples}, {"seed", seed}};
    j["mean_lcs"] = est.mean_lcs;
    j["gamma_hat"] = est.mean_ratio;
    j["std_dev"] = est.std_dev;
    j["ci95"] = {est.ci_lo, est.ci_hi};
    j["gamma_sqrtk"] = est.gamma_sqrtk;
    j["reference"] = {{"gamma_sqrtk_limit", 2.0}};
    emit(j, out_path);
    emit_csv(csv_path,
             "k,n,samples,seed,mean_lcs,gamma_hat,std_dev,ci_lo,ci_hi,gamma_sqrtk",
             {std::to_string(k) + "," + std::to_string(n) + "," +
              std::to_string(samples) + "," + std::to_string(seed) + "," +
              std::to_string(est.mean_lcs) + "," + std::to_string(est.mean_ratio) +
              "," + std::to_string(est.std_dev) + "," + std::to_string(est.ci_lo) +
              "," + std::to_string(est.ci_hi) + "," +
              std::to_string(est.gamma_sqrtk)});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest-common-subsequence toolkit for families of words"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build an extremal word family");
    std::int64_t c_n = 0, c_k = 2, c_r = 1;
    std::string c_mode = "main", c_out, c_csv;
    construct->add_option("--n", c_n, "word length")->required();
    construct->add_option("--k", c_k, "alphabet size")->required();
    construct->add_option("--r", c_r, "number of layers")->required();
    construct->add_option("--mode", c_mode, "main|unary|kplus1")
        ->check(CLI::IsMember({"main", "unary", "kplus1"}));
    construct->add_option("--out", c_out, "word file to write")->required();
    construct->add_option("--csv", c_csv, "flat table output");

    // lcs
    auto* lcs_cmd = app.add_subcommand("lcs", "pairwise and family LCS");
    std::string l_family, l_a, l_b, l_out, l_csv;
    bool l_witness = false;
    lcs_cmd->add_option("--family", l_family, "word file with the family");
    lcs_cmd->add_option("--a", l_a, "word file with the first word");
    lcs_cmd->add_option("--b", l_b, "word file with the second word");
    lcs_cmd->add_flag("--witness", l_witness, "include a maximal witness");
    lcs_cmd->add_option("--out", l_out, "JSON output path");
    lcs_cmd->add_option("--csv", l_csv, "flat table output");

    // match
    auto* match = app.add_subcommand("match", "balanced binary matcher");
    std::string m_family, m_shift = "exhaustive", m_out, m_csv;
    int m_r = 2;
    double m_alpha = -1.0, m_beta = -1.0;
    std::int64_t m_samples = 64;
    std::uint64_t m_seed = 0;
    match->add_option("--family", m_family, "word file with r+2 words")->required();
    match->add_option("--r", m_r, "layer parameter")->required();
    match->add_option("--alpha", m_alpha, "deviation threshold multiplier");
    match->add_option("--beta", m_beta, "block size multiplier");
    match->add_option("--shift", m_shift, "exhaustive|sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    match->add_option("--samples", m_samples, "sampled-shift draw count");
    match->add_option("--seed", m_seed, "sampled-shift seed");
    match->add_option("--out", m_out, "JSON output path");
    match->add_option("--csv", m_csv, "flat table output");

    // scan
    auto* scan = app.add_subcommand("scan", "exhaustive family minimization");
    std::string s_mode, s_out, s_csv;
    std::int64_t s_n = 0, s_k = 2, s_t = 2;
    bool s_multiset = false;
    scan->add_option("--mode", s_mode, "balanced|all")
        ->required()
        ->check(CLI::IsMember({"balanced", "all"}));
    scan->add_option("--n", s_n, "word length")->required();
    scan->add_option("--k", s_k, "alphabet size")->required();
    scan->add_option("--t", s_t, "family size")->required();
    scan->add_flag("--multiset", s_multiset, "allow repeated words");
    scan->add_option("--out", s_out, "JSON output path");
    scan->add_option("--csv", s_csv, "flat table output");

    // gamma
    auto* gamma = app.add_subcommand("gamma", "random-word LCS ratio estimate");
    std::int64_t g_k = 2, g_n = 0, g_samples = 0;
    std::uint64_t g_seed = 0;
    std::string g_out, g_csv;
    gamma->add_option("--k", g_k, "alphabet size")->required();
    gamma->add_option("--n", g_n, "word length")->required();
    gamma->add_option("--samples", g_samples, "number of word pairs")->required();
    gamma->add_option("--seed", g_seed, "generator seed")->required();
    gamma->add_option("--out", g_out, "JSON output path");
    gamma->add_option("--csv", g_csv, "flat table output");

    try {
        app.parse(argc, argv);
        if (construct->parsed())
            return run_construct(c_n, c_k, c_r, c_mode, c_out, c_csv);
        if (lcs_cmd->parsed()) {
            const bool family_mode = !l_family.empty();
            const bool pair_mode = !l_a.empty() && !l_b.empty();
            if (family_mode == pair_mode)
                throw std::invalid_argument("pass either --family or both --a and --b");
            return run_lcs(l_family, l_a, l_b, l_witness, l_out, l_csv);
        }
        if (match->parsed())
            return run_match(m_family, m_r,
                             m_alpha > 0 ? std::optional<double>(m_alpha) : std::nullopt,
                             m_beta > 0 ? std::optional<double>(m_beta) : std::nullopt,
                             m_shift, m_samples, m_seed, m_out, m_csv);
        if (scan->parsed())
            return run_scan(s_mode, s_n, s_k, s_t, s_multiset, s_out, s_csv);
        if (gamma->parsed())
            return run_gamma(g_k, g_n, g_samples, g_seed, g_out, g_csv);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const lcsw::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
