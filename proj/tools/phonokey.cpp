#include "phonokey/bench.hpp"
#include "phonokey/index.hpp"
#include "phonokey/medicine.hpp"
#include "phonokey/reports.hpp"
#include "phonokey/rewrite.hpp"
#include "phonokey/surname.hpp"
#include "phonokey/synth.hpp"
#include "phonokey/textnorm.hpp"
#include "phonokey/utf8.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace phonokey;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_usage = 2;

struct Config {
    std::string ruleset;
    std::string input = "-";
    std::string output = "-";
    std::string rejects;
    std::string format = "text";
    std::string rank = "none";
    std::string rules_file;
    std::vector<std::string> names;
    std::size_t top = 0;
    std::size_t records = 100'000;
    std::size_t queries = 200;
    std::uint64_t seed = 1;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool trace = false;
    bool lint = false;
    bool labels = false;
};

// Usage problems found after CLI11 parsing; reported like parser errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw std::runtime_error("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

class Input {
public:
    explicit Input(const std::string& path) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw std::runtime_error("cannot open " + path + " for reading");
        }
    }
    std::istream& stream() { return file_.is_open() ? file_ : std::cin; }

private:
    std::ifstream file_;
};

Mode mode_of(const Config& cfg) {
    auto mode = parse_mode(cfg.ruleset);
    if (!mode)
        throw UsageError("--ruleset: expected surname or medicine");
    return *mode;
}

reports::Format format_of(const Config& cfg) { return *reports::parse_format(cfg.format); }

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(std::move(line));
    }
    return lines;
}

index::PhoneticIndex load_index(const Config& cfg) {
    Input in(cfg.input);
    return index::PhoneticIndex::read(in.stream());
}

int report_rejects(const Config& cfg, const std::vector<index::Reject>& rejects) {
    if (rejects.empty())
        return exit_ok;
    std::ofstream file;
    if (!cfg.rejects.empty()) {
        file.open(cfg.rejects, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open " + cfg.rejects + " for writing");
    }
    std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cerr;
    for (const auto& r : rejects)
        out << r.line << '\t' << r.reason << '\n';
    std::cerr << rejects.size() << " record(s) rejected\n";
    return exit_input;
}

void print_trace(std::ostream& out, const rewrite::RewriteTrace& trace) {
    for (const auto& step : trace)
        out << step.step << '\t' << step.before << '\t' << step.after << '\n';
}

int cmd_key(const Config& cfg) {
    const Mode mode = mode_of(cfg);
    std::optional<rewrite::RuleSet> custom;
    if (!cfg.rules_file.empty()) {
        std::ifstream file(cfg.rules_file, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open " + cfg.rules_file + " for reading");
        std::stringstream text;
        text << file.rdbuf();
        custom = rewrite::parse_table(text.str());
    }

    Input in(cfg.input);
    Output out(cfg.output);
    const auto records = read_lines(in.stream());
    std::vector<index::Reject> rejects;

    for (std::size_t i = 0; i < records.size(); ++i) {
        std::vector<CleanToken> tokens;
        try {
            if (mode == Mode::surname)
                tokens.push_back(textnorm::clean_surname(records[i]));
            else
                tokens = textnorm::clean_medicine(records[i]);
        } catch (const textnorm::CleanError& e) {
            rejects.push_back({i + 1, std::string(textnorm::describe(e.reason()))});
            continue;
        }
        if (tokens.empty()) {
            rejects.push_back({i + 1, "no-tokens"});
            continue;
        }

        std::string line;
        std::vector<rewrite::RewriteTrace> traces;
        for (const auto& token : tokens) {
            std::string key;
            rewrite::RewriteTrace trace;
            if (mode == Mode::surname && token.hyphenated()) {
                key = token.text();
            } else if (custom) {
                key = utf8::encode(rewrite::apply(*custom, token.chars(), trace));
            } else if (mode == Mode::surname) {
                auto keyed = surname::key_with_trace(token);
                key = keyed.key.text();
                trace = std::move(keyed.trace);
            } else {
                key = utf8::encode(rewrite::apply(medicine::rules(), token.chars(), trace));
            }
            if (!line.empty())
                line += ' ';
            line += key;
            traces.push_back(std::move(trace));
        }
        out.stream() << line << '\n';
        if (cfg.trace)
            for (const auto& trace : traces)
                print_trace(out.stream(), trace);
    }
    return report_rejects(cfg, rejects);
}

int cmd_index_build(const Config& cfg) {
    const Mode mode = mode_of(cfg);
    Input in(cfg.input);
    const auto records = read_lines(in.stream());
    auto built = index::build(records, mode, cfg.threads);
    Output out(cfg.output);
    built.index.write(out.stream());
    std::cerr << "indexed " << built.index.records() << " record(s) into " << built.index.distinct_keys()
              << " key(s)\n";
    return report_rejects(cfg, built.rejects);
}

int cmd_index_stats(const Config& cfg) {
    const auto idx = load_index(cfg);
    Output out(cfg.output);
    out.stream() << reports::render(reports::optimization_report(idx), format_of(cfg));
    return exit_ok;
}

int cmd_query(const Config& cfg) {
    const auto idx = load_index(cfg);
    const auto rank = *index::parse_rank(cfg.rank);
    Output out(cfg.output);
    int status = exit_ok;
    for (const auto& name : cfg.names) {
        auto result = index::lookup(idx, name, rank);
        if (result.status == index::LookupStatus::unclean) {
            std::cerr << "query '" << name << "' is empty after cleaning\n";
            status = exit_input;
        }
        if (cfg.top != 0 && result.hits.size() > cfg.top)
            result.hits.resize(cfg.top);
        out.stream() << reports::render(result, format_of(cfg));
    }
    return status;
}

int cmd_dedup(const Config& cfg) {
    const auto idx = load_index(cfg);
    auto groups = index::dedup(idx);
    if (cfg.top != 0 && groups.size() > cfg.top)
        groups.resize(cfg.top);
    Output out(cfg.output);
    out.stream() << reports::render(std::span<const index::DuplicateGroup>(groups), format_of(cfg));
    return exit_ok;
}

int cmd_stats_freq(const Config& cfg) {
    const auto idx = load_index(cfg);
    Output out(cfg.output);
    out.stream() << reports::render(reports::frequency_report(idx, cfg.top), format_of(cfg));
    return exit_ok;
}

int cmd_bench(const Config& cfg) {
    const Mode mode = mode_of(cfg);
    Input in(cfg.input);
    const auto records = read_lines(in.stream());
    bench::Options options;
    options.queries = cfg.queries;
    options.seed = cfg.seed;
    if (cfg.top != 0)
        options.top = cfg.top;
    try {
        const auto report = bench::run(records, mode, options);
        Output out(cfg.output);
        out.stream() << bench::render(report, format_of(cfg));
    } catch (const bench::CorpusTooSmall& e) {
        std::cerr << "bench: " << e.what() << '\n';
        return exit_input;
    }
    return exit_ok;
}

int cmd_synth(const Config& cfg) {
    const Mode mode = mode_of(cfg);
    Output out(cfg.output);
    if (mode == Mode::surname) {
        synth::CorpusOptions options;
        options.records = cfg.records;
        options.seed = cfg.seed;
        for (const auto& r : synth::surname_corpus(options)) {
            out.stream() << r.text;
            if (cfg.labels)
                out.stream() << '\t' << r.base;
            out.stream() << '\n';
        }
    } else {
        for (const auto& title : synth::medicine_corpus(cfg.records, cfg.seed))
            out.stream() << title << '\n';
    }
    return exit_ok;
}

int cmd_rules(const Config& cfg) {
    rewrite::RuleSet rules;
    if (!cfg.rules_file.empty()) {
        std::ifstream file(cfg.rules_file, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open " + cfg.rules_file + " for reading");
        std::stringstream text;
        text << file.rdbuf();
        rules = rewrite::parse_table(text.str());
    } else {
        rules = mode_of(cfg) == Mode::surname ? surname::rules() : medicine::rules();
    }
    Output out(cfg.output);
    if (!cfg.lint) {
        out.stream() << rewrite::to_table(rules);
        return exit_ok;
    }
    const auto warnings = rewrite::lint(rules);
    for (const auto& w : warnings)
        out.stream() << "rule " << w.rule << " (step " << rules.rules[w.rule].step() << "): " << w.message << '\n';
    return warnings.empty() ? exit_ok : exit_input;
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Phonetic keys and inverted indexes for Ukrainian surnames and medicine titles"};
    app.require_subcommand(1, 1);

    const std::vector<std::string> rulesets{"surname", "medicine"};
    const std::vector<std::string> formats{"text", "structured"};

    auto add_ruleset = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--ruleset", cfg.ruleset, "surname or medicine")->check(CLI::IsMember(rulesets));
        if (required)
            opt->required();
        return opt;
    };
    auto add_io = [&](CLI::App* cmd, const char* input_help) {
        cmd->add_option("--input", cfg.input, input_help);
        cmd->add_option("--output", cfg.output, "output file, '-' for stdout");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "text or structured")->check(CLI::IsMember(formats));
    };

    auto* key = app.add_subcommand("key", "print the phonetic key of every input line");
    add_ruleset(key, true);
    add_io(key, "one record per line, '-' for stdin");
    key->add_flag("--trace", cfg.trace, "print step<TAB>before<TAB>after after each key");
    key->add_option("--rules-file", cfg.rules_file, "rule table to use instead of the built-in one");
    key->add_option("--rejects", cfg.rejects, "write rejected lines here instead of stderr");

    auto* build = app.add_subcommand("index-build", "build an inverted index from one record per line");
    add_ruleset(build, true);
    add_io(build, "one record per line, '-' for stdin");
    build->add_option("--rejects", cfg.rejects, "write rejected lines here instead of stderr");
    build->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);

    auto* stats = app.add_subcommand("index-stats", "optimization coefficients of an index");
    add_io(stats, "index file, '-' for stdin");
    add_format(stats);

    auto* query = app.add_subcommand("query", "look up names in an index");
    add_io(query, "index file");
    add_format(query);
    query->add_option("--name", cfg.names, "name to look up (repeatable)")->required();
    query->add_option("--rank", cfg.rank, "none or edit-distance")
        ->check(CLI::IsMember(std::vector<std::string>{"none", "edit-distance"}));
    query->add_option("--top", cfg.top, "keep at most N hits per name, 0 for all");

    auto* dedup = app.add_subcommand("dedup", "list keys shared by two or more forms");
    add_io(dedup, "index file, '-' for stdin");
    add_format(dedup);
    dedup->add_option("--top", cfg.top, "largest N groups, 0 for all");

    auto* freq = app.add_subcommand("stats-freq", "form frequencies, ending histogram and power-law table");
    add_io(freq, "index file, '-' for stdin");
    add_format(freq);
    freq->add_option("--top", cfg.top, "most frequent N forms, 0 for all");

    auto* bench_cmd = app.add_subcommand("bench", "rule timings and bucket lookup against a linear scan");
    add_ruleset(bench_cmd, true);
    add_io(bench_cmd, "corpus, one record per line");
    add_format(bench_cmd);
    bench_cmd->add_option("--queries", cfg.queries, "timed queries after warm-up")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--top", cfg.top, "hits kept by the linear scan");
    bench_cmd->add_option("--seed", cfg.seed, "query sampling seed");

    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic corpus");
    add_ruleset(synth_cmd, true);
    synth_cmd->add_option("--output", cfg.output, "output file, '-' for stdout");
    synth_cmd->add_option("--records", cfg.records, "records (surname) or titles (medicine)");
    synth_cmd->add_option("--seed", cfg.seed, "generator seed");
    synth_cmd->add_flag("--labels", cfg.labels, "append <TAB>base to each surname record");

    auto* rules_cmd = app.add_subcommand("rules", "print or lint a rule table");
    add_ruleset(rules_cmd, false);
    rules_cmd->add_option("--rules-file", cfg.rules_file, "table to read instead of a built-in ruleset");
    rules_cmd->add_option("--output", cfg.output, "output file, '-' for stdout");
    rules_cmd->add_flag("--lint", cfg.lint, "print ordering warnings; exit 1 if any");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (rules_cmd->parsed() && cfg.ruleset.empty() && cfg.rules_file.empty())
            throw UsageError("--ruleset: required unless --rules-file is given");
        if (key->parsed())
            return cmd_key(cfg);
        if (build->parsed())
            return cmd_index_build(cfg);
        if (stats->parsed())
            return cmd_index_stats(cfg);
        if (query->parsed())
            return cmd_query(cfg);
        if (dedup->parsed())
            return cmd_dedup(cfg);
        if (freq->parsed())
            return cmd_stats_freq(cfg);
        if (bench_cmd->parsed())
            return cmd_bench(cfg);
        if (synth_cmd->parsed())
            return cmd_synth(cfg);
        return cmd_rules(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
}
