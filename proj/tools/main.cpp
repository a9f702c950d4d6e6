// plurality: classify question/answer position sets, enumerate position
// universes, and sweep-verify the taxonomy's laws.
//
// Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 input error, 2 law violation found by verify.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plurality/error.hpp"
#include "plurality/indexing.hpp"
#include "plurality/model_io.hpp"
#include "plurality/reduction.hpp"
#include "plurality/sweep.hpp"
#include "plurality/taxonomy.hpp"

namespace {

using namespace plurality;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ReportFormat parse_format(const std::string& name) {
    if (name == "text")
        return ReportFormat::text;
    if (name == "json")
        return ReportFormat::json;
    throw Error("unknown format \"" + name + "\" (expected text or json)");
}

Model load_model(const std::string& file, const std::string& spec) {
    if (file.empty() == spec.empty())
        throw Error("give exactly one of: a model document file, or --spec");
    Model model = file.empty() ? parse_compact_spec(spec)
                               : parse_model_document(read_file(file));
    if (model.duplicates_removed() > 0)
        std::cerr << "warning: " << model.duplicates_removed()
                  << " duplicate position" << (model.duplicates_removed() == 1 ? "" : "s")
                  << " removed\n";
    return model;
}

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = csv.find(',', start);
        labels.push_back(csv.substr(start, comma - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return labels;
}

int run(int argc, char** argv) {
    CLI::App app{"taxonomy of question/answer position sets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "plurality 0.1.0");

    std::string file, spec, space_spec, assign_csv, format_name = "text";
    std::uint64_t position_index = 0;
    int exit_code = 0;

    const auto add_model_inputs = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "model document (JSON)");
        cmd->add_option("--spec", spec, "compact spec, e.g. 3x2:{1,8}");
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* classify_cmd = app.add_subcommand("classify", "classify a model");
    add_model_inputs(classify_cmd);
    add_format(classify_cmd);
    classify_cmd->callback([&] {
        const Model model = load_model(file, spec);
        std::cout << emit_report(model, classify(model), parse_format(format_name));
    });

    auto* explain_cmd = app.add_subcommand("explain", "plain-text account of a model");
    add_model_inputs(explain_cmd);
    explain_cmd->callback([&] {
        const Model model = load_model(file, spec);
        std::cout << explain(model);
    });

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "list a space's position universe in index order");
    enumerate_cmd->add_option("--space", space_spec, "space spec, e.g. 3x2")->required();
    add_format(enumerate_cmd);
    enumerate_cmd->callback([&] {
        const Space space = parse_space_spec(space_spec);
        const auto positions = enumerate_positions(space);
        if (parse_format(format_name) == ReportFormat::text) {
            for (std::size_t i = 0; i < positions.size(); ++i)
                std::cout << "P" << i + 1 << " = " << assignment_text(space, positions[i])
                          << "\n";
        } else {
            nlohmann::ordered_json out;
            out["space"] = {{"questions", space.question_count()},
                            {"answers", space.answer_count()}};
            auto rows = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < positions.size(); ++i) {
                auto assign = nlohmann::ordered_json::array();
                for (int q = 1; q <= space.question_count(); ++q)
                    assign.push_back(space.answer_label(positions[i].answer(q)));
                rows.push_back({{"index", i + 1}, {"assign", std::move(assign)}});
            }
            out["positions"] = std::move(rows);
            std::cout << out.dump(2) << "\n";
        }
    });

    auto* index_cmd =
        app.add_subcommand("index", "canonical index of an assignment within a space");
    index_cmd->add_option("--space", space_spec, "space spec, e.g. 3x2")->required();
    index_cmd->add_option("--assign", assign_csv, "comma-separated answer labels")->required();
    index_cmd->callback([&] {
        const Space space = parse_space_spec(space_spec);
        std::vector<int> answers;
        for (const auto& label : split_labels(assign_csv)) {
            int found = 0;
            for (int a = 1; a <= space.answer_count() && !found; ++a) {
                if (space.answer_label(a) == label)
                    found = a;
            }
            if (!found)
                throw Error("unknown answer label \"" + label + "\"");
            answers.push_back(found);
        }
        std::cout << canonical_index(space, Position(std::move(answers))) << "\n";
    });

    auto* position_cmd =
        app.add_subcommand("position", "assignment of a canonical index within a space");
    position_cmd->add_option("--space", space_spec, "space spec, e.g. 3x2")->required();
    position_cmd->add_option("--index", position_index, "canonical index, 1-based")->required();
    position_cmd->callback([&] {
        const Space space = parse_space_spec(space_spec);
        const Position position = position_from_index(space, position_index);
        for (int q = 1; q <= space.question_count(); ++q)
            std::cout << (q > 1 ? "," : "") << space.answer_label(position.answer(q));
        std::cout << "\n";
    });

    auto* reduce_cmd =
        app.add_subcommand("reduce", "merge co-answered questions into conjunctions");
    reduce_cmd->add_option("file", file, "model document (JSON)")->required();
    add_format(reduce_cmd);
    reduce_cmd->callback([&] {
        const Model model = load_model(file, spec);
        const Model merged = merge_questions(model);
        if (parse_format(format_name) == ReportFormat::json) {
            std::cout << serialize_model_document(merged);
            return;
        }
        const QuestionPartition partition = coanswered_partition(model);
        std::cout << "classes (" << partition.classes.size() << "):";
        for (const auto& label : partition.merged_labels)
            std::cout << " " << label;
        std::cout << "\npositions (" << merged.size() << "):\n";
        for (int i = 1; i <= merged.size(); ++i)
            std::cout << "  " << merged.position_name(i) << " = "
                      << assignment_text(merged.space(), merged.position(i)) << "\n";
    });

    auto* verify_cmd =
        app.add_subcommand("verify", "sweep every subset of a universe and check the laws");
    verify_cmd->add_option("--space", space_spec, "space spec, e.g. 3x2 (universe <= 20)")
        ->required();
    add_format(verify_cmd);
    verify_cmd->callback([&] {
        const SweepReport report = verify_laws(parse_space_spec(space_spec));
        std::cout << emit_report(report, parse_format(format_name));
        if (!report.law_violations.empty())
            exit_code = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const plurality::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
