#include "plurality/taxonomy.hpp"

#include <sstream>
#include <stdexcept>

namespace plurality {

std::string_view taxon_key(Taxon taxon) {
    switch (taxon) {
    case Taxon::global_monism: return "global_monism";
    case Taxon::global_pluralism: return "global_pluralism";
    case Taxon::local_monism: return "local_monism";
    case Taxon::local_pluralism: return "local_pluralism";
    }
    throw std::logic_error("unknown taxon");
}

std::string_view taxon_name(Taxon taxon) {
    switch (taxon) {
    case Taxon::global_monism: return "global monism";
    case Taxon::global_pluralism: return "global pluralism";
    case Taxon::local_monism: return "local monism";
    case Taxon::local_pluralism: return "local pluralism";
    }
    throw std::logic_error("unknown taxon");
}

TaxonReport classify(const Model& model) {
    TaxonReport report;
    report.profile = condition_profile(model);
    const auto& p = report.profile;

    if (p.g)
        report.primary = p.m ? Taxon::global_monism : Taxon::global_pluralism;
    else
        report.primary = p.m ? Taxon::local_monism : Taxon::local_pluralism;

    if (report.primary == Taxon::local_pluralism) {
        report.hybrid_pluralist = p.weak_m;
        report.hybrid_localist = p.weak_g;
        report.strict = !p.weak_m && !p.weak_g;
    }
    report.syncretist = p.s;
    return report;
}

std::string taxon_display(const TaxonReport& report) {
    std::string name;
    if (report.strict) {
        name = "strict local pluralism";
    } else {
        name = std::string(taxon_name(report.primary));
        if (report.hybrid_pluralist || report.hybrid_localist) {
            name += " (";
            name += report.hybrid_pluralist ? "hybrid pluralist" : "";
            if (report.hybrid_pluralist && report.hybrid_localist)
                name += ", ";
            name += report.hybrid_localist ? "hybrid localist" : "";
            name += ")";
        }
    }
    if (report.syncretist)
        name += ", syncretist";
    return name;
}

namespace {

std::string witness_sentence(const Model& model, const Witness& w) {
    const Space& space = model.space();
    std::ostringstream out;
    switch (w.kind) {
    case WitnessKind::mixed_position:
        out << model.position_name(w.positions[0]) << " answers "
            << space.question_label(w.questions[0]) << " with "
            << cell_text(space, model.answer_set(w.positions[0], w.questions[0]))
            << " but " << space.question_label(w.questions[1]) << " with "
            << cell_text(space, model.answer_set(w.positions[0], w.questions[1]));
        break;
    case WitnessKind::contested_question:
        out << space.question_label(w.questions[0]) << " is answered with "
            << cell_text(space, model.answer_set(w.positions[0], w.questions[0]))
            << " in " << model.position_name(w.positions[0]) << " but with "
            << cell_text(space, model.answer_set(w.positions[1], w.questions[0]))
            << " in " << model.position_name(w.positions[1]);
        break;
    case WitnessKind::uniform_position:
        out << model.position_name(w.positions[0]) << " answers every question with "
            << cell_text(space, model.answer_set(w.positions[0], 1));
        break;
    case WitnessKind::constant_question:
        out << space.question_label(w.questions[0]) << " receives "
            << cell_text(space, model.answer_set(1, w.questions[0]))
            << " in every position";
        break;
    case WitnessKind::joint_answer:
        out << model.position_name(w.positions[0]) << " answers "
            << space.question_label(w.questions[0]) << " with "
            << cell_text(space, model.answer_set(w.positions[0], w.questions[0]))
            << " jointly";
        break;
    }
    return out.str();
}

void condition_line(std::ostringstream& out, const char* tag, bool value,
                    const std::string& note) {
    out << "  " << tag << (value ? "true " : "false");
    if (!note.empty())
        out << "  " << note;
    out << "\n";
}

} // namespace

std::string explain(const Model& model, const TaxonReport& report) {
    const Space& space = model.space();
    const auto& p = report.profile;
    std::ostringstream out;

    out << "space: " << space.question_count() << " question"
        << (space.question_count() == 1 ? "" : "s") << ", " << space.answer_count()
        << " answer" << (space.answer_count() == 1 ? "" : "s") << "\n";
    out << "positions (" << model.size() << "):\n";
    for (int i = 1; i <= model.size(); ++i)
        out << "  " << model.position_name(i) << " = "
            << assignment_text(space, model.position(i)) << "\n";

    out << "taxon: " << taxon_display(report) << "\n";
    out << "conditions:\n";
    condition_line(out, "(G)  ", p.g,
                   p.g ? "" : witness_sentence(model, *p.mixed_position));
    condition_line(out, "(M)  ", p.m,
                   p.m ? "" : witness_sentence(model, *p.contested_question));
    condition_line(out, "(G') ", p.weak_g,
                   p.weak_g ? witness_sentence(model, *p.uniform_position)
                            : "every position mixes answers");
    condition_line(out, "(M') ", p.weak_m,
                   p.weak_m ? witness_sentence(model, *p.constant_question)
                            : "no question receives the same answer in every position");
    condition_line(out, "(S)  ", p.s,
                   p.s ? witness_sentence(model, *p.joint_answer) : "");
    return out.str();
}

std::string explain(const Model& model) {
    return explain(model, classify(model));
}

} // namespace plurality
