#include "plurality/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "plurality/error.hpp"
#include "plurality/indexing.hpp"

namespace plurality {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Cursor {
    std::string_view text;
    std::size_t at = 0;

    void skip_ws() {
        while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at])))
            ++at;
    }
    bool eat(char c) {
        skip_ws();
        if (at < text.size() && text[at] == c) {
            ++at;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return at == text.size();
    }
};

std::uint64_t parse_number(Cursor& cur, const char* what) {
    cur.skip_ws();
    std::uint64_t value = 0;
    const char* begin = cur.text.data() + cur.at;
    const char* end = cur.text.data() + cur.text.size();
    auto [next, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || next == begin)
        throw Error(std::string("expected ") + what + " at offset " + std::to_string(cur.at) +
                    " of \"" + std::string(cur.text) + "\"");
    cur.at += static_cast<std::size_t>(next - begin);
    return value;
}

std::pair<int, int> parse_dimensions(Cursor& cur) {
    const std::uint64_t n = parse_number(cur, "question count");
    if (!cur.eat('x'))
        throw Error("expected 'x' between question and answer counts in \"" +
                    std::string(cur.text) + "\"");
    const std::uint64_t m = parse_number(cur, "answer count");
    if (n == 0 || m == 0 || n > 1'000'000 || m > 1'000'000)
        throw Error("space dimensions out of range in \"" + std::string(cur.text) + "\"");
    return {static_cast<int>(n), static_cast<int>(m)};
}

// --- JSON document parsing -------------------------------------------------

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(where.empty() ? what : where + ": " + what);
}

std::string type_name(const ordered_json& value) {
    return value.type_name();
}

const ordered_json& expect(const ordered_json& object, const char* key,
                           const std::string& where) {
    auto it = object.find(key);
    if (it == object.end())
        fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

std::vector<std::string> parse_labels(const ordered_json& value, const std::string& where) {
    if (!value.is_array())
        fail(where, "expected an array of labels, got " + type_name(value));
    std::vector<std::string> labels;
    labels.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        const auto& entry = value[i];
        if (!entry.is_string())
            fail(where + "[" + std::to_string(i) + "]",
                 "expected a label string, got " + type_name(entry));
        labels.push_back(entry.get<std::string>());
    }
    if (labels.empty())
        fail(where, "must not be empty");
    return labels;
}

class LabelIndex {
public:
    explicit LabelIndex(const std::vector<std::string>& labels) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            index_.emplace(labels[i], static_cast<int>(i) + 1);
    }
    int resolve(const std::string& label, const std::string& where) const {
        auto it = index_.find(label);
        if (it == index_.end())
            fail(where, "unknown answer label \"" + label + "\"");
        return it->second;
    }

private:
    std::unordered_map<std::string, int> index_;
};

std::vector<int> parse_cell(const ordered_json& value, const LabelIndex& answers,
                            bool syncretic, const std::string& where) {
    if (value.is_string())
        return {answers.resolve(value.get<std::string>(), where)};
    if (value.is_array()) {
        if (!syncretic)
            fail(where, "set-valued cell in a non-syncretic document (set \"syncretic\": true)");
        if (value.empty())
            fail(where, "empty answer set");
        std::vector<int> cell;
        cell.reserve(value.size());
        for (std::size_t i = 0; i < value.size(); ++i) {
            const auto& entry = value[i];
            if (!entry.is_string())
                fail(where + "[" + std::to_string(i) + "]",
                     "expected an answer label, got " + type_name(entry));
            cell.push_back(answers.resolve(entry.get<std::string>(), where));
        }
        return cell;
    }
    fail(where, "expected an answer label" + std::string(syncretic ? " or label array" : "") +
                    ", got " + type_name(value));
}

} // namespace

Space parse_space_spec(std::string_view text) {
    Cursor cur{text};
    auto [n, m] = parse_dimensions(cur);
    if (!cur.done())
        throw Error("trailing input after space spec \"" + std::string(text) + "\"");
    return Space(n, m);
}

Model parse_compact_spec(std::string_view text) {
    Cursor cur{text};
    auto [n, m] = parse_dimensions(cur);
    Space space(n, m);

    if (!cur.eat(':') || !cur.eat('{'))
        throw Error("expected \":{\" after dimensions in \"" + std::string(text) + "\"");

    std::vector<Position> positions;
    std::unordered_set<std::uint64_t> seen;
    while (true) {
        const std::uint64_t index = parse_number(cur, "position index");
        if (!seen.insert(index).second)
            throw Error("duplicate position index " + std::to_string(index) + " in \"" +
                        std::string(text) + "\"");
        positions.push_back(position_from_index(space, index));
        if (cur.eat(','))
            continue;
        if (cur.eat('}'))
            break;
        throw Error("expected ',' or '}' in position list of \"" + std::string(text) + "\"");
    }
    if (!cur.done())
        throw Error("trailing input after compact spec \"" + std::string(text) + "\"");
    return build_model(std::move(space), std::move(positions));
}

Model parse_model_document(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_and_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                    ": malformed JSON (" + e.what() + ")");
    }

    if (!doc.is_object())
        fail("", "expected a JSON object at top level, got " + type_name(doc));
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "questions" && key != "answers" && key != "positions" && key != "syncretic")
            fail("", "unknown top-level key \"" + key + "\"");
    }

    const auto question_labels = parse_labels(expect(doc, "questions", ""), "questions");
    const auto answer_labels = parse_labels(expect(doc, "answers", ""), "answers");
    const Space space(static_cast<int>(question_labels.size()),
                      static_cast<int>(answer_labels.size()), question_labels, answer_labels);
    const LabelIndex answers(answer_labels);

    bool syncretic = false;
    if (auto it = doc.find("syncretic"); it != doc.end()) {
        if (!it->is_boolean())
            fail("syncretic", "expected a boolean, got " + type_name(*it));
        syncretic = it->get<bool>();
    }

    const auto& rows = expect(doc, "positions", "");
    if (!rows.is_array())
        fail("positions", "expected an array of positions, got " + type_name(rows));
    if (rows.empty())
        fail("positions", "must list at least one position");

    std::vector<Position> positions;
    std::vector<std::string> names;
    positions.reserve(rows.size());
    names.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string where = "positions[" + std::to_string(r) + "]";
        const ordered_json* cells = &rows[r];
        std::string name;
        if (rows[r].is_object()) {
            for (const auto& [key, value] : rows[r].items()) {
                (void)value;
                if (key != "name" && key != "answers")
                    fail(where, "unknown key \"" + key + "\"");
            }
            if (auto it = rows[r].find("name"); it != rows[r].end()) {
                if (!it->is_string() || it->get<std::string>().empty())
                    fail(where + ".name", "expected a non-empty string");
                name = it->get<std::string>();
            }
            cells = &expect(rows[r], "answers", where);
        }
        if (!cells->is_array())
            fail(where, "expected an array of cells, got " + type_name(*cells));
        if (cells->size() != static_cast<std::size_t>(space.question_count()))
            fail(where, "has " + std::to_string(cells->size()) + " cells, expected " +
                            std::to_string(space.question_count()));
        std::vector<std::vector<int>> parsed;
        parsed.reserve(cells->size());
        for (std::size_t c = 0; c < cells->size(); ++c)
            parsed.push_back(parse_cell((*cells)[c], answers, syncretic,
                                        where + "[" + std::to_string(c) + "]"));
        positions.push_back(Position(std::move(parsed)));
        names.push_back(std::move(name));
    }

    return build_model(space, std::move(positions), syncretic, std::move(names));
}

std::string serialize_model_document(const Model& model) {
    const Space& space = model.space();
    ordered_json doc;
    doc["questions"] = std::vector<std::string>(space.question_labels().begin(),
                                                space.question_labels().end());
    doc["answers"] = std::vector<std::string>(space.answer_labels().begin(),
                                              space.answer_labels().end());

    ordered_json rows = ordered_json::array();
    for (int i = 1; i <= model.size(); ++i) {
        ordered_json cells = ordered_json::array();
        for (int q = 1; q <= space.question_count(); ++q) {
            const auto& cell = model.answer_set(i, q);
            if (model.syncretic()) {
                ordered_json labels = ordered_json::array();
                for (int a : cell)
                    labels.push_back(space.answer_label(a));
                cells.push_back(std::move(labels));
            } else {
                cells.push_back(space.answer_label(cell.front()));
            }
        }
        const auto custom = model.custom_names();
        if (!custom.empty() && !custom[static_cast<std::size_t>(i - 1)].empty()) {
            ordered_json row;
            row["name"] = custom[static_cast<std::size_t>(i - 1)];
            row["answers"] = std::move(cells);
            rows.push_back(std::move(row));
        } else {
            rows.push_back(std::move(cells));
        }
    }
    doc["positions"] = std::move(rows);
    doc["syncretic"] = model.syncretic();
    return doc.dump(2) + "\n";
}

namespace {

ordered_json witness_json(const Model& model, const Witness& witness) {
    ordered_json out;
    out["kind"] = std::string(witness_kind_name(witness.kind));
    out["positions"] = witness.positions;
    ordered_json names = ordered_json::array();
    for (int p : witness.positions)
        names.push_back(model.position_name(p));
    out["position_names"] = std::move(names);
    out["questions"] = witness.questions;
    ordered_json qlabels = ordered_json::array();
    for (int q : witness.questions)
        qlabels.push_back(model.space().question_label(q));
    out["question_labels"] = std::move(qlabels);
    return out;
}

ordered_json profile_json(const Model& model, const ConditionProfile& p) {
    ordered_json out;
    out["g"] = p.g;
    out["m"] = p.m;
    out["weak_g"] = p.weak_g;
    out["weak_m"] = p.weak_m;
    out["s"] = p.s;
    ordered_json witnesses = ordered_json::object();
    if (p.mixed_position)
        witnesses["not_g"] = witness_json(model, *p.mixed_position);
    if (p.contested_question)
        witnesses["not_m"] = witness_json(model, *p.contested_question);
    if (p.uniform_position)
        witnesses["weak_g"] = witness_json(model, *p.uniform_position);
    if (p.constant_question)
        witnesses["weak_m"] = witness_json(model, *p.constant_question);
    if (p.joint_answer)
        witnesses["s"] = witness_json(model, *p.joint_answer);
    out["witnesses"] = std::move(witnesses);
    return out;
}

double elapsed_ms(const SweepReport& report) {
    return std::chrono::duration<double, std::milli>(report.elapsed).count();
}

} // namespace

std::string emit_report(const Model& model, const TaxonReport& report, ReportFormat format) {
    if (format == ReportFormat::text)
        return explain(model, report);

    ordered_json out;
    out["primary"] = std::string(taxon_key(report.primary));
    out["taxon"] = taxon_display(report);
    out["hybrid_pluralist"] = report.hybrid_pluralist;
    out["hybrid_localist"] = report.hybrid_localist;
    out["strict"] = report.strict;
    out["syncretist"] = report.syncretist;
    out["profile"] = profile_json(model, report.profile);
    return out.dump(2) + "\n";
}

std::string emit_report(const SweepReport& report, ReportFormat format) {
    static constexpr std::array<Taxon, 4> taxa = {
        Taxon::global_monism, Taxon::global_pluralism, Taxon::local_monism,
        Taxon::local_pluralism};

    if (format == ReportFormat::json) {
        ordered_json out;
        out["space"] = {{"questions", report.space.question_count()},
                        {"answers", report.space.answer_count()}};
        out["universe"] = report.space.universe_size();
        out["models_checked"] = report.models_checked;
        ordered_json counts;
        for (Taxon t : taxa)
            counts[std::string(taxon_key(t))] = report.taxon_count(t);
        out["taxon_counts"] = std::move(counts);
        out["flag_counts"] = {{"hybrid_pluralist", report.hybrid_pluralist_count},
                              {"hybrid_localist", report.hybrid_localist_count},
                              {"strict", report.strict_count}};
        ordered_json violations = ordered_json::array();
        for (const auto& v : report.law_violations)
            violations.push_back({{"subset_mask", v.subset_mask},
                                  {"law", v.law},
                                  {"detail", v.detail}});
        out["law_violations"] = std::move(violations);
        out["elapsed_ms"] = elapsed_ms(report);
        return out.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "space: " << report.space.question_count() << " questions, "
        << report.space.answer_count() << " answers (universe "
        << report.space.universe_size() << ")\n";
    out << "models checked: " << report.models_checked << "\n";
    out << "taxon counts:\n";
    for (Taxon t : taxa)
        out << "  " << taxon_name(t) << ": " << report.taxon_count(t) << "\n";
    out << "flag counts:\n";
    out << "  hybrid pluralist: " << report.hybrid_pluralist_count << "\n";
    out << "  hybrid localist: " << report.hybrid_localist_count << "\n";
    out << "  strict: " << report.strict_count << "\n";
    if (report.law_violations.empty()) {
        out << "law violations: none\n";
    } else {
        out << "law violations (" << report.law_violations.size() << "):\n";
        for (const auto& v : report.law_violations)
            out << "  subset " << v.subset_mask << ": " << v.law << ": " << v.detail << "\n";
    }
    out << "elapsed: " << elapsed_ms(report) << " ms\n";
    return out.str();
}

} // namespace plurality
