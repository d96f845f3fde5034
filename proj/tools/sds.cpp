// Command-line front end: verification, canonical forms, equivalence,
// feasibility, classification, autocorrelation, block-design development,
// stochastic search, and corpus checking, with optional line-delimited JSON.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sds/sds.hpp"

using nlohmann::json;

namespace {

struct NamedFamily {
    std::optional<sds::ParameterSet> params;
    sds::Family family;
};

// First positional of several commands: either "(v;r,s;lambda)" or a bare
// modulus.
struct Scope {
    int v;
    std::optional<sds::ParameterSet> params;
};

Scope parse_scope(const std::string& text) {
    if (!text.empty() && text.front() == '(') {
        sds::ParameterSet params = sds::parse_params(text);
        return {params.v(), params};
    }
    sds::detail::TextCursor cur(text);
    cur.skip_spaces();
    long long v = cur.integer();
    cur.skip_spaces();
    if (!cur.at_end()) throw sds::ParseError("trailing input after modulus", cur.column());
    if (v < 2) throw sds::ParseError("modulus must be at least 2", 1);
    return {static_cast<int>(v), std::nullopt};
}

// Families come inline ("{0,1} {0,2}") or from a file of corpus records
// ("@path"). Inline needs the scope for the modulus.
std::vector<NamedFamily> load_families(const std::string& arg, const std::optional<Scope>& scope) {
    std::vector<NamedFamily> out;
    if (!arg.empty() && arg.front() == '@') {
        auto records = sds::load_corpus_file(arg.substr(1), 0);
        for (auto& record : records)
            if (record.status == sds::RecordStatus::family)
                out.push_back({record.params, std::move(*record.family)});
        if (out.empty()) throw std::runtime_error(arg.substr(1) + ": no family records");
        return out;
    }
    if (!scope) throw std::runtime_error("inline families need a modulus or parameter set");
    out.push_back({scope->params, sds::parse_family(arg, scope->v)});
    return out;
}

void check_params_match(const sds::ParameterSet& params, const sds::Family& family) {
    std::vector<int> sizes;
    for (const sds::Block& b : family.blocks()) sizes.push_back(b.size());
    sds::ParameterSet probe(family.v(), sizes, params.lambda());
    if (params.v() != family.v() || probe.sizes() != params.sizes())
        throw std::runtime_error("family blocks do not match the stated parameters");
}

json family_json(const sds::Family& family) {
    json blocks = json::array();
    for (const sds::Block& b : family.blocks()) blocks.push_back(b.elements());
    return blocks;
}

void emit(const json& object) { std::cout << object.dump() << "\n"; }

// ---------------------------------------------------------------------------

int run_verify(const std::string& scope_text, const std::string& family_text, bool as_json) {
    std::optional<Scope> scope;
    if (!scope_text.empty()) scope = parse_scope(scope_text);
    int exit_code = 0;
    for (const NamedFamily& nf : load_families(family_text, scope)) {
        if (nf.params) check_params_match(*nf.params, nf.family);
        sds::VerificationReport report = sds::verify_sds(nf.family);
        if (report.is_sds && nf.params && *report.lambda != nf.params->lambda()) {
            throw std::runtime_error("family verifies with lambda=" +
                                     std::to_string(*report.lambda) +
                                     ", parameters claim lambda=" +
                                     std::to_string(nf.params->lambda()));
        }
        if (as_json) {
            json object{{"command", "verify"},
                        {"v", nf.family.v()},
                        {"family", sds::render_family(nf.family)},
                        {"blocks", family_json(nf.family)},
                        {"is_sds", report.is_sds}};
            if (report.is_sds) {
                object["lambda"] = *report.lambda;
                object["n"] = report.parameters->order();
                object["params"] = sds::render_params(*report.parameters);
            } else {
                object["witness_shift"] = report.witness->first;
                object["witness_count"] = report.witness->second;
            }
            emit(object);
        } else if (report.is_sds) {
            std::printf("lambda=%d n=%d\n", *report.lambda, report.parameters->order());
        } else {
            std::printf("not an SDS: shift=%d count=%d\n", report.witness->first,
                        report.witness->second);
        }
        if (!report.is_sds) exit_code = 1;
    }
    return exit_code;
}

int run_canon(const std::string& scope_text, const std::string& family_text, bool as_json) {
    Scope scope = parse_scope(scope_text);
    NamedFamily nf = load_families(family_text, scope).front();
    sds::NormalFormResult result = sds::normal_form(nf.family);
    if (as_json) {
        emit(json{{"command", "canon"},
                  {"v", nf.family.v()},
                  {"input", sds::render_family(nf.family)},
                  {"normal_form", sds::render_family(result.representative)},
                  {"blocks", family_json(result.representative)},
                  {"unique_up_to_permutation", result.unique_up_to_permutation},
                  {"minimal_set_size", result.minimal_set_size},
                  {"is_fixpoint", sds::is_normal_form(nf.family)}});
    } else {
        std::printf("%s\n", sds::render_family(result.representative).c_str());
        std::printf("unique_up_to_permutation=%s minimal_set_size=%d\n",
                    result.unique_up_to_permutation ? "true" : "false",
                    result.minimal_set_size);
    }
    return 0;
}

int run_equiv(const std::string& scope_text, const std::string& first_text,
              const std::string& second_text, bool as_json) {
    Scope scope = parse_scope(scope_text);
    sds::Family x = load_families(first_text, scope).front().family;
    sds::Family y = load_families(second_text, scope).front().family;
    const bool equivalent = sds::are_equivalent(x, y);
    if (as_json)
        emit(json{{"command", "equiv"},
                  {"v", scope.v},
                  {"first", sds::render_family(x)},
                  {"second", sds::render_family(y)},
                  {"equivalent", equivalent}});
    else
        std::printf("%s\n", equivalent ? "equivalent" : "non-equivalent");
    return equivalent ? 0 : 1;
}

int run_feasible(int v_max, bool as_json) {
    for (const sds::ParameterSet& p : sds::enumerate_feasible(v_max)) {
        if (as_json) {
            sds::TypeTags tags = sds::classify(p);
            emit(json{{"command", "feasible"},
                      {"params", sds::render_params(p)},
                      {"v", p.v()},
                      {"r", p.r()},
                      {"s", p.s()},
                      {"lambda", p.lambda()},
                      {"n", p.order()},
                      {"d_optimal", tags.d_optimal},
                      {"periodic_pair", tags.periodic_pair},
                      {"equal_blocks", tags.equal_blocks}});
        } else {
            std::printf("%s\n", sds::render_params(p).c_str());
        }
    }
    return 0;
}

int run_classify(const std::string& params_text, bool as_json) {
    sds::ParameterSet params = sds::parse_params(params_text);
    sds::TypeTags tags = sds::classify(params);
    if (as_json)
        emit(json{{"command", "classify"},
                  {"params", sds::render_params(params)},
                  {"n", params.order()},
                  {"feasible", sds::is_feasible(params)},
                  {"d_optimal", tags.d_optimal},
                  {"periodic_pair", tags.periodic_pair},
                  {"equal_blocks", tags.equal_blocks}});
    else
        std::printf("n=%d feasible=%s d_optimal=%s periodic_pair=%s equal_blocks=%s\n",
                    params.order(), sds::is_feasible(params) ? "true" : "false",
                    tags.d_optimal ? "true" : "false", tags.periodic_pair ? "true" : "false",
                    tags.equal_blocks ? "true" : "false");
    return 0;
}

void print_profile(const char* label, const sds::CorrelationProfile& profile) {
    std::printf("%s:", label);
    for (long long x : profile.values) std::printf(" %lld", x);
    std::printf("\n");
}

int run_pacf(const std::string& first_text, const std::string& second_text, bool nonperiodic,
             bool as_json) {
    sds::BinarySequence first = sds::parse_sequence(first_text);
    auto correlate = [&](const sds::BinarySequence& s) {
        return nonperiodic ? sds::nacf(s) : sds::pacf(s);
    };
    const char* kind = nonperiodic ? "nacf" : "pacf";
    if (second_text.empty()) {
        sds::CorrelationProfile profile = correlate(first);
        if (as_json)
            emit(json{{"command", "pacf"},
                      {"kind", kind},
                      {"sequence", sds::render_sequence(first)},
                      {"values", profile.values}});
        else
            print_profile(kind, profile);
        return 0;
    }
    sds::BinarySequence second = sds::parse_sequence(second_text);
    sds::CorrelationProfile p1 = correlate(first);
    sds::CorrelationProfile p2 = correlate(second);
    sds::CorrelationProfile sum = p1;
    if (p1.values.size() != p2.values.size())
        throw std::runtime_error("sequences must have equal length");
    for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += p2.values[i];
    if (as_json) {
        emit(json{{"command", "pacf"},
                  {"kind", kind},
                  {"sequence", sds::render_sequence(first)},
                  {"sequence2", sds::render_sequence(second)},
                  {"values", p1.values},
                  {"values2", p2.values},
                  {"sum", sum.values}});
    } else {
        print_profile(nonperiodic ? "nacf1" : "pacf1", p1);
        print_profile(nonperiodic ? "nacf2" : "pacf2", p2);
        print_profile("sum", sum);
    }
    return 0;
}

int run_golay2sds(const std::string& first_text, const std::string& second_text, bool as_json) {
    sds::SequencePair pair{sds::parse_sequence(first_text), sds::parse_sequence(second_text)};
    sds::Family family = sds::sequences_to_sds(pair);
    sds::VerificationReport report = sds::verify_sds(family);
    json object{{"command", "golay2sds"},
                {"v", family.v()},
                {"family", sds::render_family(family)},
                {"is_sds", report.is_sds}};
    if (!report.is_sds) {
        if (as_json) {
            object["witness_shift"] = report.witness->first;
            emit(object);
        } else {
            std::printf("%s\n", sds::render_family(family).c_str());
            std::printf("not an SDS: the pair is not periodic-complementary (shift=%d)\n",
                        report.witness->first);
        }
        return 1;
    }
    sds::NormalFormResult nf = sds::normal_form(family);
    if (as_json) {
        object["params"] = sds::render_params(*report.parameters);
        object["normal_form"] = sds::render_family(nf.representative);
        emit(object);
    } else {
        std::printf("family: %s\n", sds::render_family(family).c_str());
        std::printf("params: %s\n", sds::render_params(*report.parameters).c_str());
        std::printf("normal: %s\n", sds::render_family(nf.representative).c_str());
    }
    return 0;
}

int run_bibd(const std::string& scope_text, const std::string& family_text, bool as_json,
             bool list_blocks) {
    Scope scope = parse_scope(scope_text);
    NamedFamily nf = load_families(family_text, scope).front();
    auto [params, blocks] = sds::develop_bibd(nf.family);
    if (as_json) {
        json object{{"command", "bibd"}, {"v", params.v},     {"b", params.b},
                    {"r", params.r_rep}, {"k", params.k},     {"lambda", params.lambda},
                    {"pair_coverage_ok", true}};
        if (list_blocks) {
            json rendered = json::array();
            for (const sds::Block& b : blocks) rendered.push_back(sds::render_block(b));
            object["blocks"] = rendered;
        }
        emit(object);
    } else {
        std::printf("bibd: v=%d b=%d r=%d k=%d lambda=%d\n", params.v, params.b, params.r_rep,
                    params.k, params.lambda);
        std::printf("pair_coverage=ok\n");
        if (list_blocks)
            for (const sds::Block& b : blocks) std::printf("%s\n", sds::render_block(b).c_str());
    }
    return 0;
}

int run_search(const std::string& params_text, const sds::SearchConfig& config,
               const std::string& mode, bool as_json) {
    sds::ParameterSet params = sds::parse_params(params_text);
    sds::SearchResult result = sds::search(params, config);
    json object{{"command", "search"},
                {"params", sds::render_params(params)},
                {"seed", config.rng_seed},
                {"found", result.family.has_value()},
                {"generations", result.stats.generations},
                {"evaluations", result.stats.evaluations},
                {"best_fitness", result.stats.best_fitness}};
    if (!result.family) {
        if (as_json)
            emit(object);
        else
            std::printf("none found (generations=%lld evaluations=%lld best_fitness=%lld)\n",
                        result.stats.generations, result.stats.evaluations,
                        result.stats.best_fitness);
        return 1;
    }
    sds::Family rendered = mode == "normal"
                               ? sds::normal_form(*result.family).representative
                               : *result.family;
    if (as_json) {
        object["family"] = sds::render_family(rendered);
        object["emit"] = mode;
        emit(object);
    } else {
        std::printf("%s\n", sds::render_family(rendered).c_str());
        std::printf("stats: generations=%lld evaluations=%lld\n", result.stats.generations,
                    result.stats.evaluations);
    }
    return 0;
}

int run_corpus_check(const std::string& dir, bool deep_equiv, bool skip_fixpoint, bool as_json) {
    auto records = sds::load_corpus_dir(dir);
    sds::VerifyOptions options;
    options.check_fixpoint = !skip_fixpoint;
    options.check_equivalence = deep_equiv;
    sds::CorpusReport report = sds::verify_corpus(records, options);
    const bool clean = report.failures.empty() && report.equivalence_duplicates.empty();
    if (as_json) {
        json failures = json::array();
        for (const sds::CorpusFailure& f : report.failures)
            failures.push_back(json{{"record", sds::render_record(records[f.record_index])},
                                    {"reason", f.reason}});
        json duplicates = json::array();
        for (auto [a, b] : report.equivalence_duplicates)
            duplicates.push_back(json{{"first", sds::render_record(records[a])},
                                      {"second", sds::render_record(records[b])}});
        emit(json{{"command", "corpus-check"},
                  {"data_dir", dir},
                  {"records", report.total_records},
                  {"families", report.family_records},
                  {"verified", report.verified},
                  {"fixpoints", report.normal_form_fixpoints},
                  {"fixpoint_checked", !skip_fixpoint},
                  {"deep_equiv", deep_equiv},
                  {"duplicates", duplicates},
                  {"failures", failures},
                  {"clean", clean}});
    } else {
        std::printf("records=%d families=%d verified=%d", report.total_records,
                    report.family_records, report.verified);
        if (!skip_fixpoint) std::printf(" fixpoints=%d", report.normal_form_fixpoints);
        if (deep_equiv) std::printf(" duplicates=%zu", report.equivalence_duplicates.size());
        std::printf(" failures=%zu\n", report.failures.size());
        for (const sds::CorpusFailure& f : report.failures)
            std::printf("FAIL %s: %s\n", sds::render_record(records[f.record_index]).c_str(),
                        f.reason.c_str());
        for (auto [a, b] : report.equivalence_duplicates)
            std::printf("DUPLICATE %s == %s\n", sds::render_record(records[a]).c_str(),
                        sds::render_record(records[b]).c_str());
    }
    return clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic two-block difference families: verification, canonical forms, search"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "line-delimited JSON output")->configurable(false);

    std::string scope_text, family_text, second_text, params_text;
    std::string seq1, seq2;

    auto* verify = app.add_subcommand("verify", "check the difference-family property");
    verify->add_option("params", scope_text, "(v;r,s;lambda) or modulus")->required();
    verify->add_option("family", family_text, "blocks or @file")->required();

    auto* canon = app.add_subcommand("canon", "canonical (normal) form");
    canon->add_option("params", scope_text, "(v;r,s;lambda) or modulus")->required();
    canon->add_option("family", family_text, "blocks or @file")->required();

    auto* equiv = app.add_subcommand("equiv", "equivalence of two families");
    equiv->add_option("modulus", scope_text, "(v;r,s;lambda) or modulus")->required();
    equiv->add_option("first", family_text, "blocks or @file")->required();
    equiv->add_option("second", second_text, "blocks or @file")->required();

    int v_max = 50;
    auto* feasible = app.add_subcommand("feasible", "feasible parameter sets");
    feasible->add_option("--vmax", v_max, "largest group order")->required();

    auto* classify = app.add_subcommand("classify", "special-type tags of a parameter set");
    classify->add_option("params", params_text, "(v;r,s;lambda)")->required();

    bool nonperiodic = false;
    auto* pacf = app.add_subcommand("pacf", "autocorrelation of +/- sequences");
    pacf->add_option("sequence", seq1, "+/- sequence")->required();
    pacf->add_option("sequence2", seq2, "optional second sequence (adds the sum)");
    pacf->add_flag("--nacf", nonperiodic, "non-periodic autocorrelation");

    auto* golay = app.add_subcommand("golay2sds", "difference family from a +/- pair");
    golay->add_option("first", seq1, "+/- sequence")->required();
    golay->add_option("second", seq2, "+/- sequence")->required();

    bool list_blocks = false;
    auto* bibd = app.add_subcommand("bibd", "develop an equal-block-size family");
    bibd->add_option("params", scope_text, "(v;r,s;lambda) or modulus")->required();
    bibd->add_option("family", family_text, "blocks or @file")->required();
    bibd->add_flag("--blocks", list_blocks, "list the developed blocks");

    sds::SearchConfig config;
    std::string emit_mode = "normal";
    auto* search = app.add_subcommand("search", "stochastic search for a family");
    search->add_option("--params", params_text, "(v;r,s;lambda)")->required();
    search->add_option("--seed", config.rng_seed, "RNG seed");
    search->add_option("--pop", config.population_size, "population size per island");
    search->add_option("--gens", config.max_generations, "generations per restart");
    search->add_option("--restarts", config.restarts, "extra restarts");
    search->add_option("--islands", config.islands, "island count");
    search->add_option("--time-limit", config.time_limit_seconds, "wall-clock cap, seconds");
    search->add_option("--mutation", config.mutation_rate, "mutation probability");
    search->add_option("--crossover", config.crossover_rate, "crossover probability");
    search->add_option("--local-budget", config.local_search_budget, "local-search steps");
    search->add_option("--emit", emit_mode, "normal|raw")
        ->check(CLI::IsMember({"normal", "raw"}));

    const char* env_dir = std::getenv("SDS_DATA_DIR");
    std::string data_dir = env_dir ? env_dir : "data";
    bool deep_equiv = false, skip_fixpoint = false;
    auto* corpus = app.add_subcommand("corpus-check", "verify the shipped table data");
    corpus->add_option("--data", data_dir, "data directory (default $SDS_DATA_DIR or ./data)");
    corpus->add_flag("--deep-equiv", deep_equiv, "pairwise equivalence pass per parameter set");
    corpus->add_flag("--no-fixpoint", skip_fixpoint, "skip the normal-form fixpoint check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return run_verify(scope_text, family_text, as_json);
        if (*canon) return run_canon(scope_text, family_text, as_json);
        if (*equiv) return run_equiv(scope_text, family_text, second_text, as_json);
        if (*feasible) return run_feasible(v_max, as_json);
        if (*classify) return run_classify(params_text, as_json);
        if (*pacf) return run_pacf(seq1, seq2, nonperiodic, as_json);
        if (*golay) return run_golay2sds(seq1, seq2, as_json);
        if (*bibd) return run_bibd(scope_text, family_text, as_json, list_blocks);
        if (*search) return run_search(params_text, config, emit_mode, as_json);
        if (*corpus) return run_corpus_check(data_dir, deep_equiv, skip_fixpoint, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
