#include "spc/report.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "spc/catalog.hpp"
#include "spc/colorers.hpp"
#include "spc/errors.hpp"
#include "spc/generator.hpp"
#include "spc/solver.hpp"

namespace spc {

namespace {

using Runner = std::function<ColorerResult(const Graph&)>;

struct CellDef {
    std::string class_label;
    std::string girth_label;
    SSequence s;
    CellStatus status;
    ClassConstraint constraint; // proven cells
    Runner runner;              // proven-constructive cells
    std::string witness;        // disproven cells
    std::string note;           // conjectured cells
};

SSequence seq(std::initializer_list<int> v)
{
    return make_sequence(std::vector<int>(v));
}

std::vector<CellDef> table_definition()
{
    std::vector<CellDef> defs;
    auto add = [&](CellDef d) { defs.push_back(std::move(d)); };

    ClassConstraint sat0g4{.saturation_max = 0, .g3_max = 4};
    ClassConstraint sat1g3{.saturation_max = 1, .g3_equals = 3};
    ClassConstraint sat1g4{.saturation_max = 1, .g3_max = 4};
    ClassConstraint sat2g3{.saturation_max = 2, .g3_equals = 3};
    ClassConstraint t0g3{.three_k_max = 0, .g3_equals = 3};
    ClassConstraint t1g3{.three_k_max = 1, .g3_equals = 3};
    ClassConstraint t2g3{.three_k_max = 2, .g3_equals = 3};
    ClassConstraint anyg3{.three_k_max = 3, .g3_equals = 3};
    ClassConstraint anyg4{.g3_max = 4};

    auto low = [](const SSequence& s) {
        return [s](const Graph& g) { return color_low_saturation(g, s); };
    };

    // 0-saturated, g3 <= 4
    add({"0-saturated", "g3<=4", seq({1, 2, 2, 3}), CellStatus::proven_constructive, sat0g4,
         low(seq({1, 2, 2, 3})), "", ""});
    add({"0-saturated", "g3<=4", seq({2, 2, 2, 2, 3}), CellStatus::proven_constructive, sat0g4,
         low(seq({2, 2, 2, 2, 3})), "", "except g1"});
    add({"0-saturated", "g3<=4", seq({1, 2, 3, 4, 5, 6}), CellStatus::proven_constructive,
         sat0g4, low(seq({1, 2, 3, 4, 5, 6})), "", "k>=6"});
    add({"0-saturated", "g3<=4", seq({1, 2, 2}), CellStatus::disproven, {}, nullptr, "g1", ""});
    add({"0-saturated", "g3<=4", seq({2, 2, 2, 2}), CellStatus::disproven, {}, nullptr, "g4",
         ""});
    add({"0-saturated", "g3<=4", seq({1, 2, 2, 4}), CellStatus::conjectured, {}, nullptr, "",
         ""});
    add({"0-saturated", "g3<=4", seq({2, 2, 2, 2, 4}), CellStatus::conjectured, {}, nullptr, "",
         "except g1"});
    add({"0-saturated", "g3<=4", seq({1, 2, 3, 4}), CellStatus::conjectured, {}, nullptr, "",
         ""});

    // 1-saturated, g3 = 3
    add({"1-saturated", "g3=3", seq({1, 1, 3, 3}), CellStatus::proven_constructive, sat1g3,
         low(seq({1, 1, 3, 3})), "", "k>=3"});
    add({"1-saturated", "g3=3", seq({1, 2, 2, 3}), CellStatus::proven_constructive, sat1g3,
         low(seq({1, 2, 2, 3})), "", ""});
    add({"1-saturated", "g3=3", seq({2, 2, 2, 2, 3}), CellStatus::proven_constructive, sat1g3,
         low(seq({2, 2, 2, 2, 3})), "", ""});
    add({"1-saturated", "g3=3", seq({1, 2, 3, 4, 5, 6}), CellStatus::proven_constructive,
         sat1g3, low(seq({1, 2, 3, 4, 5, 6})), "", "k>=6"});
    add({"1-saturated", "g3=3", seq({1, 1, 3}), CellStatus::disproven, {}, nullptr, "g5", ""});
    add({"1-saturated", "g3=3", seq({1, 2, 2}), CellStatus::disproven, {}, nullptr, "g2", ""});
    add({"1-saturated", "g3=3", seq({2, 2, 2, 2}), CellStatus::disproven, {}, nullptr, "g6",
         ""});
    add({"1-saturated", "g3=3", seq({1, 2, 3, 3}), CellStatus::conjectured, {}, nullptr, "",
         ""});
    add({"1-saturated", "g3=3", seq({1, 2, 2, 4}), CellStatus::conjectured, {}, nullptr, "",
         ""});
    add({"1-saturated", "g3=3", seq({2, 2, 2, 2, 4}), CellStatus::conjectured, {}, nullptr, "",
         ""});
    add({"1-saturated", "g3=3", seq({1, 2, 3, 4, 5}), CellStatus::conjectured, {}, nullptr, "",
         ""});

    // 1-saturated, g3 <= 4 and g3 >= 5
    add({"1-saturated", "g3<=4", seq({1, 2, 2, 2}), CellStatus::proven_constructive, sat1g4,
         [](const Graph& g) { return color_1sat_g4(g); }, "", ""});
    add({"1-saturated", "g3<=4", seq({1, 2, 2}), CellStatus::disproven, {}, nullptr, "g7", ""});
    add({"1-saturated", "g3>=5", seq({1, 2, 2, 2}), CellStatus::disproven, {}, nullptr, "g8",
         ""});

    // 2-saturated, g3 = 3
    add({"2-saturated", "g3=3", seq({1, 1, 2}), CellStatus::proven_constructive, sat2g3,
         [](const Graph& g) { return color_2sat_112(g); }, "", ""});
    add({"2-saturated", "g3=3", seq({1, 2, 2, 2}), CellStatus::proven_constructive, sat2g3,
         [](const Graph& g) { return color_2sat_1222(g); }, "", ""});
    add({"2-saturated", "g3=3", seq({2, 2, 2, 2, 2}), CellStatus::proven_constructive, sat2g3,
         [](const Graph& g) { return color_2sat_22222(g); }, "", ""});
    add({"2-saturated", "g3=3", seq({1, 1, 3, 3}), CellStatus::disproven, {}, nullptr, "g10",
         ""});
    add({"2-saturated", "g3=3", seq({1, 2, 2, 3}), CellStatus::disproven, {}, nullptr, "g10",
         ""});
    add({"2-saturated", "g3=3", seq({2, 2, 2, 2}), CellStatus::disproven, {}, nullptr, "g6",
         ""});
    add({"2-saturated", "g3=3", seq({2, 2, 2, 2, 3}), CellStatus::conjectured, {}, nullptr, "",
         ""});

    // 2-saturated, g3 >= 4
    add({"2-saturated", "g3>=4", seq({1, 2, 2, 2}), CellStatus::disproven, {}, nullptr, "g9",
         ""});
    add({"2-saturated", "g3>=4", seq({2, 2, 2, 2, 2}), CellStatus::disproven, {}, nullptr, "g9",
         ""});
    add({"2-saturated", "g3>=4", seq({1, 2, 2, 2, 2}), CellStatus::conjectured, {}, nullptr, "",
         ""});
    add({"2-saturated", "g3>=4", seq({1, 1, 2}), CellStatus::conjectured, {}, nullptr, "", ""});

    // (3,0)
    add({"(3,0)-saturated", "g3=3", seq({1, 1, 2, 4}), CellStatus::proven_constructive, t0g3,
         [](const Graph& g) { return color_3isat(g, 0); }, "", ""});
    add({"(3,0)-saturated", "g3=3", seq({1, 2, 2, 2, 2}), CellStatus::proven_constructive, t0g3,
         [](const Graph& g) { return color_30sat(g, ThirtyVariant::v12222); }, "", ""});
    add({"(3,0)-saturated", "g3=3", seq({2, 2, 2, 2, 2, 2}), CellStatus::proven_constructive,
         t0g3, [](const Graph& g) { return color_30sat(g, ThirtyVariant::v222222); }, "", ""});
    add({"(3,0)-saturated", "g3=3", seq({1, 1, 3, 3}), CellStatus::disproven, {}, nullptr,
         "g10", ""});
    add({"(3,0)-saturated", "g3=3", seq({1, 1, 2}), CellStatus::conjectured, {}, nullptr, "",
         ""});

    // (3,1)
    add({"(3,1)-saturated", "g3=3", seq({1, 1, 2, 3}), CellStatus::proven_constructive, t1g3,
         [](const Graph& g) { return color_3isat(g, 1); }, "", ""});
    add({"(3,1)-saturated", "g3=3", seq({1, 1, 3, 3}), CellStatus::disproven, {}, nullptr,
         "g10", ""});

    // (3,2)
    add({"(3,2)-saturated", "g3=3", seq({1, 1, 3, 3, 3}), CellStatus::proven_constructive, t2g3,
         [](const Graph& g) { return color_32sat(g); }, "", ""});
    add({"(3,2)-saturated", "g3=3", seq({1, 1, 3, 3}), CellStatus::disproven, {}, nullptr,
         "g10", ""});

    // (3,3)
    add({"(3,3)-saturated", "g3=3", seq({1, 1, 2, 2}), CellStatus::proven_solver, anyg3,
         nullptr, "", "prior work"});
    add({"(3,3)-saturated", "g3=3", seq({1, 1, 3, 3, 3}), CellStatus::disproven, {}, nullptr,
         "g11", "for g11"});
    add({"(3,3)-saturated", "g3=3", seq({1, 1, 3, 3, 3}), CellStatus::conjectured, {}, nullptr,
         "", "except g11"});
    add({"(3,3)-saturated", "g3=3", seq({1, 1, 2, 3}), CellStatus::conjectured, {}, nullptr, "",
         ""});
    add({"(3,3)-saturated", "g3=3", seq({2, 2, 2, 2, 2, 2, 2}), CellStatus::conjectured, {},
         nullptr, "", ""});
    add({"(3,3)-saturated", "g3<=4", seq({1, 2, 2, 2, 2, 2}), CellStatus::proven_solver, anyg4,
         nullptr, "", "prior work"});
    add({"(3,3)-saturated", "g3<=4", seq({1, 1, 2, 3}), CellStatus::conjectured, {}, nullptr,
         "", "prior conjecture"});
    add({"(3,3)-saturated", "g3<=4", seq({1, 2, 2, 2, 2}), CellStatus::conjectured, {}, nullptr,
         "", "prior conjecture"});

    return defs;
}

} // namespace

TableReport run_table(const TableOptions& options)
{
    TableReport report;
    std::uint64_t cell_seed = options.seed;
    for (const auto& def : table_definition()) {
        ReportCell cell;
        cell.class_label = def.class_label;
        cell.girth_label = def.girth_label;
        cell.s = def.s;
        cell.status = def.status;
        ++cell_seed;
        switch (def.status) {
        case CellStatus::proven_constructive: {
            auto suite = generate_suite(def.constraint, options.count, options.n_min,
                                        options.n_max, cell_seed * 65537);
            int pass = 0;
            for (const auto& g : suite) {
                auto res = def.runner(g);
                if (verify(g, res.seq, res.coloring).valid)
                    ++pass;
            }
            cell.ok = pass == static_cast<int>(suite.size());
            cell.evidence = std::to_string(pass) + "/" + std::to_string(suite.size()) +
                            " generated instances";
            break;
        }
        case CellStatus::proven_solver: {
            auto suite = generate_suite(def.constraint, options.solver_count, options.n_min,
                                        std::min(options.n_max, 16), cell_seed * 65537);
            int pass = 0;
            for (const auto& g : suite)
                if (decide(g, def.s).colorable())
                    ++pass;
            cell.ok = pass == static_cast<int>(suite.size());
            cell.evidence = std::to_string(pass) + "/" + std::to_string(suite.size()) +
                            " instances via solver";
            break;
        }
        case CellStatus::disproven: {
            auto out = decide(catalog_get(def.witness).graph, def.s);
            cell.ok = out.status == SolveOutcome::Status::not_colorable;
            cell.evidence = "witness " + def.witness +
                            (cell.ok ? " confirmed" : " NOT confirmed");
            break;
        }
        case CellStatus::conjectured:
            cell.evidence = def.note.empty() ? "conjectured" : "conjectured (" + def.note + ")";
            break;
        }
        if (!cell.ok)
            report.all_ok = false;
        report.cells.push_back(std::move(cell));
    }
    return report;
}

namespace {

const char* status_name(CellStatus s)
{
    switch (s) {
    case CellStatus::proven_constructive: return "proven-constructive";
    case CellStatus::proven_solver: return "proven-solver";
    case CellStatus::disproven: return "disproven";
    case CellStatus::conjectured: return "conjectured";
    }
    return "?";
}

} // namespace

std::string render_table(const TableReport& report)
{
    std::ostringstream out;
    out << "class              g3     sequence          status               evidence\n";
    out << "-----------------------------------------------------------------------------\n";
    for (const auto& c : report.cells) {
        std::string row = c.class_label;
        row.resize(19, ' ');
        std::string girth = c.girth_label;
        girth.resize(7, ' ');
        std::string sseq = "(" + to_string(c.s) + ")";
        sseq.resize(18, ' ');
        std::string st = status_name(c.status);
        st.resize(21, ' ');
        out << row << girth << sseq << st << c.evidence;
        if (!c.ok)
            out << "  [FAILED]";
        out << '\n';
    }
    out << (report.all_ok ? "all execution-backed cells confirmed\n"
                          : "SOME CELLS FAILED\n");
    return out.str();
}

std::string render_table_json(const TableReport& report)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : report.cells) {
        rows.push_back({{"class", c.class_label},
                        {"g3", c.girth_label},
                        {"s", to_string(c.s)},
                        {"status", status_name(c.status)},
                        {"evidence", c.evidence},
                        {"ok", c.ok}});
    }
    nlohmann::json doc{{"cells", rows}, {"all_ok", report.all_ok}};
    return doc.dump(2);
}

} // namespace spc
