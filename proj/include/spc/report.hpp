#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spc/classify.hpp"
#include "spc/packing.hpp"

namespace spc {

enum class CellStatus { proven_constructive, proven_solver, disproven, conjectured };

struct ReportCell {
    std::string class_label;
    std::string girth_label;
    SSequence s;
    CellStatus status = CellStatus::conjectured;
    std::string evidence; // filled by the run for execution-backed cells
    bool ok = true;       // execution-backed cells only
};

struct TableOptions {
    int count = 6;        // generated instances per proven cell
    int solver_count = 4; // instances per prior-work cell
    int n_min = 8;
    int n_max = 20;
    std::uint64_t seed = 1;
};

struct TableReport {
    std::vector<ReportCell> cells;
    bool all_ok = true;
};

/// Reproduce the summary table: run the constructive colorer over a generated
/// suite for each proven cell, confirm each disproven cell on its catalog
/// witness, and render conjectured cells without execution-backed status.
TableReport run_table(const TableOptions& options);

std::string render_table(const TableReport& report);
std::string render_table_json(const TableReport& report);

} // namespace spc
