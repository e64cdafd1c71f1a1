// Copyright 2026 The qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qss/classical.hpp"
#include "qss/code.hpp"
#include "qss/errors.hpp"
#include "qss/infogroup.hpp"
#include "qss/oracle.hpp"
#include "qss/report.hpp"
#include "qss/twirl.hpp"

namespace qss {

namespace {

struct RunConfig {
    std::string input;
    std::optional<std::size_t> n;
    std::optional<std::string> subset;
    std::optional<std::uint64_t> seed;
    std::string format = "text";
    std::uint64_t cap = kDefaultAmplitudeCap;
    std::size_t max_players = ClassifyOptions{}.max_players;
    double tolerance = kStateTol;
    std::string check = "all";
    std::optional<std::size_t> q;
    std::optional<std::uint64_t> p;
    std::optional<std::string> key;
    std::optional<std::string> from_plan;
    std::optional<std::string> out_path;
    std::string bundle;
    std::string players;
};

bool structured(const RunConfig &cfg) { return cfg.format == "structured"; }

std::uint64_t require_seed(const RunConfig &cfg) {
    if (!cfg.seed) {
        throw InputError("--seed is required for this command");
    }
    return *cfg.seed;
}

void emit(const RunConfig &cfg, std::ostream &out, const std::string &text) {
    if (!cfg.out_path) {
        out << text;
        return;
    }
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!file) {
        throw InputError("cannot write '" + *cfg.out_path + "'");
    }
    file << text;
}

std::string code_label(const StabilizerCode &code, std::optional<std::size_t> d) {
    std::ostringstream s;
    s << "[[" << code.n << "," << code.k;
    if (d) {
        s << "," << *d;
    }
    s << "]]_" << code.d.value();
    return s.str();
}

std::string join_subsets(const std::vector<Subset> &subsets) {
    std::string out;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        out += (i ? " " : "") + subsets[i].to_string();
    }
    return subsets.empty() ? "none" : out;
}

std::string join_digits(const FieldVector &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out;
}

FieldVector parse_digits(const std::string &text) {
    FieldVector out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
            item.size() > 9) {
            throw InputError("--key: '" + item + "' is not a digit");
        }
        out.push_back(static_cast<Digit>(std::stoul(item)));
    }
    if (out.empty()) {
        throw InputError("--key: empty key");
    }
    return out;
}

std::string scheme_text(const ClassicalPrescription &p) {
    if (p.threshold) {
        return "Shamir (" + std::to_string(*p.threshold) + "," + std::to_string(p.players) + ")";
    }
    return "monotone over " + std::to_string(p.minimal_authorized.size()) + " minimal authorized sets";
}

// --- validate ---

int cmd_validate(const RunConfig &cfg, std::ostream &out) {
    auto code = resolve_code(cfg.input, cfg.n);
    auto report = validate(code);
    ValidationSummary summary{summarize(code), report.ok(), std::nullopt, report.violations, report.notes};
    if (report.ok() && code.k > 0) {
        try {
            summary.distance = distance(code);
        } catch (const ResourceError &) {
            summary.notes.push_back("distance not computed: enumeration exceeds the cap");
        }
    }
    if (structured(cfg)) {
        emit(cfg, out, dump_report(to_json(summary)));
    } else {
        std::string text = (summary.valid ? "valid " : "invalid ") + code_label(code, summary.distance) + "\n";
        for (const auto &v : summary.violations) {
            text += "  violation: " + v + "\n";
        }
        for (const auto &note : summary.notes) {
            text += "  note: " + note + "\n";
        }
        emit(cfg, out, text);
    }
    return summary.valid ? kExitOk : kExitCheckFailed;
}

// --- classify ---

int cmd_classify(const RunConfig &cfg, std::ostream &out) {
    auto code = resolve_code(cfg.input, cfg.n);
    ClassificationReport report{summarize(code), classify(code, {cfg.max_players})};
    const auto &t = report.triplet;
    if (structured(cfg)) {
        emit(cfg, out, dump_report(to_json(report)));
        return kExitOk;
    }
    std::ostringstream s;
    s << code.name << " " << code_label(code, std::nullopt) << "\n";
    s << "A: " << t.authorized().size() << " subsets, F: " << t.forbidden().size()
      << " subsets, I: " << t.intermediate().size() << " subsets\n";
    if (auto q = t.threshold()) {
        s << (t.is_perfect() ? "threshold (" : "ramp threshold (") << *q << "," << code.n << ")\n";
    }
    s << "minimal authorized: " << join_subsets(t.minimal_authorized) << "\n";
    s << "maximal forbidden: " << join_subsets(t.maximal_forbidden) << "\n";
    if (code.n <= kListingCap) {
        s << "intermediate: " << join_subsets(t.intermediate()) << "\n";
    }
    emit(cfg, out, s.str());
    return kExitOk;
}

// --- twirl-plan ---

int cmd_twirl_plan(const RunConfig &cfg, std::ostream &out) {
    auto code = resolve_code(cfg.input, cfg.n);
    auto triplet = classify(code, {cfg.max_players});
    auto plan = twirl_plan(code, triplet);
    auto report = plan_report(code, plan);
    if (structured(cfg)) {
        emit(cfg, out, dump_report(to_json(report)));
        return kExitOk;
    }
    if (plan.empty()) {
        emit(cfg, out, "no twirl needed (I empty)\n");
        return kExitOk;
    }
    std::string gens;
    for (std::size_t i = 0; i < plan.generators.size(); ++i) {
        gens += (i ? ", " : "") + to_string(plan.generators[i]);
    }
    emit(cfg, out,
         "twirl = ⟨" + gens + "⟩, l = " + std::to_string(plan.key_length) +
             ", classical scheme: " + scheme_text(plan.scheme) + "\n");
    return kExitOk;
}

// --- simulate ---

struct Simulation {
    const StabilizerCode &code;
    SchemeTriplet triplet;
    TwirlPlan plan;
    Encoder encoder;
    std::vector<Subset> subsets;
    std::uint64_t seed;
    double tolerance;
};

CheckResult check_infogroup(const Simulation &sim) {
    std::size_t mismatches = 0;
    std::string first;
    for (auto s : sim.subsets) {
        bool same = false;
        try {
            same = info_group(sim.code, s).same_span(info_group_bruteforce(sim.encoder, s));
        } catch (const std::logic_error &) {
            same = false;
        }
        if (!same) {
            if (mismatches++ == 0) {
                first = " (first at " + s.to_string() + ")";
            }
        }
    }
    return {"infogroup", mismatches == 0, std::nullopt,
            std::to_string(sim.subsets.size()) + " subsets, " + std::to_string(mismatches) + " discrepancies" + first};
}

CheckResult check_duality(const Simulation &sim) {
    auto check = check_structure(sim.triplet);
    std::string detail = check.ok() ? "duality and monotonicity hold" : check.failures.front();
    return {"duality", check.ok(), std::nullopt, detail};
}

CheckResult check_choi(const Simulation &sim) {
    std::optional<DenseOperator> keyed;
    if (!sim.plan.empty()) {
        keyed = dense_matrix(sample_twirl(sim.plan, sim.seed).op);
    }
    std::size_t failures = 0;
    double worst = 0;
    std::string first;
    for (auto s : sim.subsets) {
        auto report = choi_check(sim.encoder, s, keyed);
        bool ok = false;
        switch (sim.triplet.class_of(s)) {
            case AccessClass::authorized:
                ok = report.authorized();
                worst = std::max({worst, report.decoupling_defect, std::abs(report.purity - 1.0)});
                break;
            case AccessClass::forbidden:
                ok = report.forbidden();
                worst = std::max(worst, report.product_defect);
                break;
            case AccessClass::intermediate:
                ok = !report.authorized() && !report.forbidden();
                break;
        }
        if (!ok && failures++ == 0) {
            first = " (first at " + s.to_string() + ")";
        }
    }
    return {"choi", failures == 0, worst,
            std::to_string(sim.subsets.size()) + " subsets, " + std::to_string(failures) + " failures" + first};
}

CheckResult check_concealment(const Simulation &sim) {
    std::vector<Subset> targets;
    for (auto s : sim.subsets) {
        if (sim.triplet.class_of(s) == AccessClass::intermediate) {
            targets.push_back(s);
        }
    }
    if (targets.empty()) {
        return {"concealment", true, 0.0, "no intermediate subsets"};
    }
    std::mt19937_64 rng(sim.seed);
    std::vector<DenseVector> secrets;
    for (int i = 0; i < 5; ++i) {
        secrets.push_back(random_state(sim.encoder.input_dimension(), rng));
    }
    double worst = 0;
    for (auto s : targets) {
        worst = std::max(worst, verify_concealment(sim.encoder, sim.plan, secrets, s).max_distance);
    }
    std::ostringstream detail;
    detail << targets.size() << " intermediate subsets, 5 secrets, " << int_pow(sim.code.d.value(), sim.plan.key_length)
           << " keys";
    return {"concealment", worst < sim.tolerance, worst, detail.str()};
}

CheckResult check_key_transport(const Simulation &sim) {
    if (sim.plan.empty()) {
        return {"key", true, std::nullopt, "no key to share"};
    }
    auto sample = sample_twirl(sim.plan, sim.seed);
    auto bundle = key_transport(sim.plan, sim.triplet, sample.key, sim.seed);
    bool ok = true;
    for (auto s : sim.triplet.minimal_authorized) {
        ok = ok && reconstruct_key(bundle, s) == sample.key;
    }
    for (auto s : sim.triplet.maximal_forbidden) {
        ok = ok && !can_reconstruct(bundle, s);
    }
    for (auto s : sim.triplet.intermediate()) {
        ok = ok && !can_reconstruct(bundle, s);
    }
    return {"key", ok, std::nullopt,
            "minimal authorized sets recover the key; forbidden and intermediate sets cannot"};
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out) {
    const std::uint64_t seed = require_seed(cfg);
    static const std::vector<std::string> kChecks = {"all", "concealment", "choi", "infogroup", "duality"};
    if (std::find(kChecks.begin(), kChecks.end(), cfg.check) == kChecks.end()) {
        throw InputError("--check must be one of all|concealment|choi|infogroup|duality");
    }
    auto code = resolve_code(cfg.input, cfg.n);
    checked_dimension(code.d.value(), code.n + code.k, cfg.cap);
    auto triplet = classify(code, {cfg.max_players});
    auto plan = twirl_plan(code, triplet);
    Encoder encoder(code, cfg.cap);
    std::vector<Subset> subsets =
        cfg.subset ? std::vector<Subset>{parse_subset(*cfg.subset, code.n)} : enumerate_subsets(code.n);
    Simulation sim{code, std::move(triplet), std::move(plan), std::move(encoder), std::move(subsets), seed,
                   cfg.tolerance};

    SimulationReport report{summarize(code), seed, {}};
    const bool all = cfg.check == "all";
    if (all || cfg.check == "infogroup") {
        report.checks.push_back(check_infogroup(sim));
    }
    if (all || cfg.check == "duality") {
        report.checks.push_back(check_duality(sim));
    }
    if (all || cfg.check == "choi") {
        report.checks.push_back(check_choi(sim));
    }
    if (all || cfg.check == "concealment") {
        report.checks.push_back(check_concealment(sim));
    }
    if (all) {
        report.checks.push_back(check_key_transport(sim));
    }

    if (structured(cfg)) {
        emit(cfg, out, dump_report(to_json(report)));
    } else {
        std::ostringstream s;
        for (const auto &c : report.checks) {
            s << (c.passed ? "pass " : "FAIL ") << c.name;
            if (c.value) {
                s << " max " << (c.name == "concealment" ? "distance " : "defect ") << *c.value;
            }
            s << ": " << c.detail << "\n";
        }
        s << (report.passed() ? "all pass" : "some checks failed") << "\n";
        emit(cfg, out, s.str());
    }
    return report.passed() ? kExitOk : kExitCheckFailed;
}

// --- share-key / reconstruct ---

int cmd_share_key(const RunConfig &cfg, std::ostream &out) {
    const std::uint64_t seed = require_seed(cfg);
    ClassicalShareSet bundle;
    if (cfg.from_plan) {
        if (cfg.q || cfg.p) {
            throw InputError("--from-plan cannot be combined with --q or --P");
        }
        auto code = resolve_code(*cfg.from_plan, cfg.n);
        auto triplet = classify(code, {cfg.max_players});
        auto plan = twirl_plan(code, triplet);
        bundle = cfg.key ? key_transport(plan, triplet, parse_digits(*cfg.key), seed)
                         : key_transport(plan, triplet, seed);
    } else {
        if (!cfg.q || !cfg.n || !cfg.p || !cfg.key) {
            throw InputError("share-key needs either --from-plan or all of --q, --n, --P and --key");
        }
        bundle = shamir_share(parse_digits(*cfg.key), *cfg.q, *cfg.n, PrimeModulus(*cfg.p), seed);
    }
    const std::string json = dump_report(to_json(bundle));
    if (cfg.out_path) {
        emit(cfg, out, json);
    }
    if (structured(cfg)) {
        if (!cfg.out_path) {
            out << json;
        }
        return kExitOk;
    }
    std::ostringstream s;
    if (bundle.kind == SharingKind::threshold) {
        s << "Shamir (" << bundle.q << "," << bundle.players << ")";
    } else {
        s << "monotone over " << bundle.minimal_sets.size() << " minimal authorized sets";
    }
    s << " over Z_" << bundle.p.value() << ", key length " << bundle.key_length << "\n";
    for (const auto &share : bundle.shares) {
        s << "player " << share.player << ": " << join_digits(share.digits) << "\n";
    }
    out << s.str();
    return kExitOk;
}

int cmd_reconstruct(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    std::ifstream file(cfg.bundle, std::ios::binary);
    if (!file) {
        throw InputError("cannot read bundle '" + cfg.bundle + "'");
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    auto bundle = share_bundle_from_json(parse_report(buffer.str()));
    Subset players = parse_subset(cfg.players, bundle.players);
    KeyReport report;
    try {
        report = {players.one_based(), reconstruct_key(bundle, players)};
    } catch (const InsufficientShares &e) {
        err << "refused: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    if (structured(cfg)) {
        emit(cfg, out, dump_report(to_json(report)));
    } else {
        emit(cfg, out, "key = " + join_digits(report.key) + "\n");
    }
    return kExitOk;
}

void add_code_options(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("code", cfg.input, "catalog:<name> or a code file")->required();
    sub->add_option("--n", cfg.n, "size parameter for catalog families such as ghz_n");
    sub->add_option("--max-players", cfg.max_players, "refuse to classify codes with more players");
}

void add_format_option(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--format", cfg.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", cfg.out_path, "write output to a file");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Access structures and twirl protocols for stabilizer secret sharing", "qss"};
    app.require_subcommand(1);

    auto *validate_cmd = app.add_subcommand("validate", "check a code's consistency");
    add_code_options(validate_cmd, cfg);
    add_format_option(validate_cmd, cfg);

    auto *classify_cmd = app.add_subcommand("classify", "split all player subsets into A, F and I");
    add_code_options(classify_cmd, cfg);
    add_format_option(classify_cmd, cfg);

    auto *plan_cmd = app.add_subcommand("twirl-plan", "twirl group, key length and classical scheme");
    add_code_options(plan_cmd, cfg);
    add_format_option(plan_cmd, cfg);

    auto *simulate_cmd = app.add_subcommand("simulate", "run state-vector checks of the full protocol");
    add_code_options(simulate_cmd, cfg);
    add_format_option(simulate_cmd, cfg);
    simulate_cmd->add_option("--seed", cfg.seed, "random seed");
    simulate_cmd->add_option("--subset", cfg.subset, "restrict checks to one subset, e.g. 1,3,4");
    simulate_cmd->add_option("--cap", cfg.cap, "largest state-vector dimension to simulate");
    simulate_cmd->add_option("--check", cfg.check, "all|concealment|choi|infogroup|duality");
    simulate_cmd->add_option("--tol", cfg.tolerance, "concealment tolerance (trace distance)");

    auto *share_cmd = app.add_subcommand("share-key", "split a classical key into shares");
    add_format_option(share_cmd, cfg);
    share_cmd->add_option("--seed", cfg.seed, "random seed");
    share_cmd->add_option("--from-plan", cfg.from_plan, "share a twirl key for this code's plan");
    share_cmd->add_option("--n", cfg.n, "players, or the size parameter with --from-plan");
    share_cmd->add_option("--q", cfg.q, "threshold");
    share_cmd->add_option("--P", cfg.p, "prime field of the shares");
    share_cmd->add_option("--key", cfg.key, "key digits, e.g. 1,0,1");
    share_cmd->add_option("--max-players", cfg.max_players, "refuse to classify codes with more players");

    auto *reconstruct_cmd = app.add_subcommand("reconstruct", "recover a key from a share bundle");
    add_format_option(reconstruct_cmd, cfg);
    reconstruct_cmd->add_option("--bundle", cfg.bundle, "share bundle file")->required();
    reconstruct_cmd->add_option("--players", cfg.players, "pooling players, e.g. 1,2,4")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (validate_cmd->parsed()) {
            return cmd_validate(cfg, out);
        }
        if (classify_cmd->parsed()) {
            return cmd_classify(cfg, out);
        }
        if (plan_cmd->parsed()) {
            return cmd_twirl_plan(cfg, out);
        }
        if (simulate_cmd->parsed()) {
            return cmd_simulate(cfg, out);
        }
        if (share_cmd->parsed()) {
            return cmd_share_key(cfg, out);
        }
        return cmd_reconstruct(cfg, out, err);
    } catch (const ResourceError &e) {
        err << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace qss
