// Copyright 2026 The qct Authors
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

#pragma once

// The `qct` command-line front end, kept in a header so tests can drive it
// in-process. Exit codes: 0 success (or countermodel found), 1 search
// exhausted, 2 syntax or usage error, 3 capacity, 4 model error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qct/json_io.hpp"
#include "qct/qct.hpp"

namespace qct::cli {

enum ExitCode : int {
    kOk = 0,
    kNotFound = 1,
    kSyntax = 2,
    kCapacity = 3,
    kModel = 4,
};

inline constexpr std::size_t kMaxAmplitudeDumpQubits = 12;

struct CliConfig {
    std::string sentence;
    std::optional<std::string> then;
    std::optional<std::string> model_path;
    bool json = false;
    bool trace = false;
    bool amplitudes = false;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    double delta = 0;
    std::optional<std::size_t> n_max;
};

/// 12 significant digits.
inline std::string format_prob(double p) {
    std::ostringstream os;
    os << std::setprecision(12) << p;
    return os.str();
}

class UsageError : public Error {
   public:
    using Error::Error;
};

/// --n-max, then QCT_N_MAX, then the default.
inline std::size_t resolve_n_max(const CliConfig &cfg) {
    std::size_t n = kDefaultMaxQubits;
    if (cfg.n_max) {
        n = *cfg.n_max;
    } else if (const char *env = std::getenv("QCT_N_MAX"); env && *env) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(env, &used);
            if (used != std::string(env).size() || v < 1) {
                throw UsageError("QCT_N_MAX must be a positive integer");
            }
            n = static_cast<std::size_t>(v);
        } catch (const std::logic_error &) {
            throw UsageError("QCT_N_MAX must be a positive integer");
        }
    }
    if (n < 1 || n > kHardMaxQubits) {
        throw UsageError("qubit limit must lie in [1, " + std::to_string(kHardMaxQubits) + "]");
    }
    return n;
}

inline QubModel load_model(const std::optional<std::string> &path) {
    if (!path) {
        return {};
    }
    std::ifstream in(*path);
    if (!in) {
        throw ModelError("cannot open model file '" + *path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ModelError(std::string("model file is not valid JSON: ") + e.what());
    }
    return model_from_json(j);
}

inline int cmd_parse(const CliConfig &cfg, std::ostream &out) {
    Sentence s = parse(cfg.sentence);
    if (cfg.json) {
        json j = {{"sentence", to_string(s)}, {"ast", sentence_to_json(s)}, {"atcompl", atomic_complexity(s)}};
        out << j.dump() << '\n';
    } else {
        out << "sentence: " << to_string(s) << '\n';
        out << "ast: " << to_debug_string(s) << '\n';
        out << "atcompl: " << atomic_complexity(s) << '\n';
    }
    return kOk;
}

inline int cmd_tree(const CliConfig &cfg, std::ostream &out) {
    SyntacticTree t = build_tree(parse(cfg.sentence));
    if (cfg.json) {
        json levels = json::array();
        for (const auto &level : t.levels()) {
            json nodes = json::array();
            for (const auto &node : level) {
                nodes.push_back(to_string(node));
            }
            levels.push_back(std::move(nodes));
        }
        out << json{{"levels", std::move(levels)}, {"height", t.height()}}.dump() << '\n';
    } else {
        out << to_string(t);
        out << "Height: " << t.height() << '\n';
    }
    return kOk;
}

inline int cmd_compile(const CliConfig &cfg, std::ostream &out) {
    std::size_t n_max = resolve_n_max(cfg);
    Sentence s = parse(cfg.sentence);
    check_capacity(atomic_complexity(s), n_max);
    QuantumTree qt = compile(build_tree(s));
    if (cfg.json) {
        out << circuit_to_json(qt).dump() << '\n';
        return kOk;
    }
    out << "n: " << qt.n << '\n';
    if (qt.layers.empty()) {
        out << "(no layers)\n";
    }
    for (std::size_t i = 0; i < qt.layers.size(); ++i) {
        out << 'U' << i + 1 << ": " << qt.layers[i].to_string() << '\n';
    }
    return kOk;
}

inline int cmd_eval(const CliConfig &cfg, std::ostream &out) {
    std::size_t n_max = resolve_n_max(cfg);
    Sentence s = parse(cfg.sentence);
    QubModel model = load_model(cfg.model_path);
    std::size_t n = atomic_complexity(s);
    check_capacity(n, n_max);
    if (cfg.amplitudes && n > kMaxAmplitudeDumpQubits) {
        throw CapacityExceeded(n, kMaxAmplitudeDumpQubits);
    }

    SyntacticTree t = build_tree(s);
    QuantumTree qt = compile(t);
    std::vector<QRegister> trace = run_with_trace(qt, input_state(t, model, n_max));
    QRegister direct = eval(s, model, n_max);
    const QRegister &output = trace.back();
    double p = prob(output);
    bool truth = std::abs(p - 1.0) <= kEpsProb;
    double deviation = max_abs_diff(output, direct);

    if (cfg.json) {
        json j = {{"sentence", to_string(s)},
                  {"atcompl", n},
                  {"prob", p},
                  {"true", truth},
                  {"max_deviation", deviation}};
        if (cfg.trace || cfg.amplitudes) {
            json levels = json::array();
            for (std::size_t k = 0; k < trace.size(); ++k) {
                json entry = {{"level", t.height() - k}, {"prob", prob(trace[k])}};
                if (cfg.amplitudes) {
                    entry["amplitudes"] = register_to_json(trace[k])["amplitudes"];
                }
                levels.push_back(std::move(entry));
            }
            j["trace"] = std::move(levels);
        }
        out << j.dump() << '\n';
        return kOk;
    }

    out << "sentence: " << to_string(s) << '\n';
    out << "atcompl: " << n << '\n';
    if (cfg.trace || cfg.amplitudes) {
        for (std::size_t k = 0; k < trace.size(); ++k) {
            out << "level " << t.height() - k << " prob: " << format_prob(prob(trace[k])) << '\n';
            if (cfg.amplitudes) {
                for (std::size_t j = 0; j < trace[k].dimension(); ++j) {
                    Amplitude c = trace[k][j];
                    out << "  " << j << ": " << format_prob(c.real()) << (c.imag() < 0 ? " - " : " + ")
                        << format_prob(std::abs(c.imag())) << "i\n";
                }
            }
        }
    }
    out << "prob: " << format_prob(p) << '\n';
    out << "true: " << (truth ? "yes" : "no") << '\n';
    out << "circuit vs eval max deviation: " << format_prob(deviation) << '\n';
    return kOk;
}

inline int cmd_refute(const CliConfig &cfg, std::ostream &out) {
    std::size_t n_max = resolve_n_max(cfg);
    if (cfg.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    if (!(cfg.delta >= 0 && cfg.delta < 0.25)) {
        throw UsageError("--delta must lie in [0, 0.25)");
    }
    Sentence premise = parse(cfg.sentence);
    std::optional<Sentence> conclusion;
    if (cfg.then) {
        conclusion = parse(*cfg.then);
    }
    auto found = search_countermodel(premise, conclusion, cfg.trials, ModelSampler(cfg.seed, cfg.delta), n_max);
    if (!found) {
        if (cfg.json) {
            out << json{{"found", false}, {"trials", cfg.trials}}.dump() << '\n';
        } else {
            out << "no countermodel in " << cfg.trials << " trials\n";
        }
        return kNotFound;
    }
    if (cfg.json) {
        json j = {{"found", true}, {"trial", found->trial}, {"prob_premise", found->prob_premise}};
        if (found->prob_conclusion) {
            j["prob_conclusion"] = *found->prob_conclusion;
        }
        j["model"] = model_to_json(found->model);
        out << j.dump() << '\n';
        return kOk;
    }
    out << "countermodel found at trial " << found->trial << '\n';
    out << "prob(premise): " << format_prob(found->prob_premise) << '\n';
    if (found->prob_conclusion) {
        out << "prob(conclusion): " << format_prob(*found->prob_conclusion) << '\n';
    }
    out << "model: " << model_to_json(found->model).dump() << '\n';
    return kOk;
}

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum computational logic: parse, compile and evaluate sentences under qubit semantics", "qct"};
    app.require_subcommand(1);
    CliConfig cfg;
    std::size_t n_max_flag = 0;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("sentence", cfg.sentence, "Sentence, e.g. \"p and not p\"")->required();
        sub->add_flag("--json", cfg.json, "Machine-readable output");
        sub->add_option("--n-max", n_max_flag, "Qubit limit (falls back to QCT_N_MAX, default 24)");
    };

    auto *parse_cmd = app.add_subcommand("parse", "Print the desugared AST and atomic complexity");
    add_common(parse_cmd);
    auto *tree_cmd = app.add_subcommand("tree", "Print the syntactical tree, root first");
    add_common(tree_cmd);
    auto *compile_cmd = app.add_subcommand("compile", "Print the quantum tree (U1 first)");
    add_common(compile_cmd);

    auto *eval_cmd = app.add_subcommand("eval", "Evaluate a sentence under a model");
    add_common(eval_cmd);
    std::string model_path;
    eval_cmd->add_option("--model", model_path, "Model JSON file");
    eval_cmd->add_flag("--trace", cfg.trace, "Print Prob of every level's quregister");
    eval_cmd->add_flag("--amplitudes", cfg.amplitudes, "Also dump amplitudes (n <= 12)");

    auto *refute_cmd = app.add_subcommand("refute", "Search for a countermodel");
    add_common(refute_cmd);
    std::string then;
    long long trials = 1000;
    refute_cmd->add_option("--then", then, "Consequent; omit to refute logical truth");
    refute_cmd->add_option("--trials", trials, "Number of sampled models")->capture_default_str();
    refute_cmd->add_option("--seed", cfg.seed, "Sampler seed")->capture_default_str();
    refute_cmd->add_option("--delta", cfg.delta, "Margin keeping atomic Prob away from 0, 1/2, 1")
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kSyntax;
    }

    auto given = [](CLI::App *sub, const char *name) { return sub->count(name) > 0; };
    CLI::App *active = app.get_subcommands().front();
    if (given(active, "--n-max")) {
        cfg.n_max = n_max_flag;
    }
    if (active == eval_cmd && given(eval_cmd, "--model")) {
        cfg.model_path = model_path;
    }
    if (active == refute_cmd) {
        if (given(refute_cmd, "--then")) {
            cfg.then = then;
        }
        if (trials < 1) {
            err << "error: --trials must be at least 1\n";
            return kSyntax;
        }
        cfg.trials = static_cast<std::size_t>(trials);
    }

    try {
        if (active == parse_cmd) {
            return cmd_parse(cfg, out);
        }
        if (active == tree_cmd) {
            return cmd_tree(cfg, out);
        }
        if (active == compile_cmd) {
            return cmd_compile(cfg, out);
        }
        if (active == eval_cmd) {
            return cmd_eval(cfg, out);
        }
        return cmd_refute(cfg, out);
    } catch (const SyntaxError &e) {
        err << e.what() << '\n';
        return kSyntax;
    } catch (const ReservedName &e) {
        err << e.what() << '\n';
        return kSyntax;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kSyntax;
    } catch (const CapacityExceeded &e) {
        err << e.what() << '\n';
        return kCapacity;
    } catch (const UnboundAtom &e) {
        err << "model error: " << e.what() << '\n';
        return kModel;
    } catch (const ModelError &e) {
        err << "model error: " << e.what() << '\n';
        return kModel;
    } catch (const SamplerStuck &e) {
        err << e.what() << '\n';
        return kNotFound;
    }
}

}  // namespace qct::cli
