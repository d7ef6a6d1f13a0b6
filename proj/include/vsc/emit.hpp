#pragma once

#include <string>
#include <vector>

#include "vsc/rational.hpp"
#include "vsc/space.hpp"

namespace vsc {

// One emitted invariant. kind: "gw" (Gromov-Witten), "vsc" (elliptic
// virtual structure constant), "n"/"m" (curve counts).
struct ResultRow {
    int d = 0;
    Insertions ins;
    std::string kind;
    Rational value;
};

struct Report {
    std::string space;   // specification string
    std::string genus;   // "0", "1" or "counts"
    std::vector<ResultRow> rows;
};

// Fixed output order: (d, kind, insertions).
void sort_rows(std::vector<ResultRow>& rows);

std::string to_json(const Report& report);
std::string to_csv(const Report& report);
std::string to_markdown(const Report& report);

// Fixture file: the output schema plus a "source" label naming the table.
struct Fixture {
    std::string source;
    std::string space;
    std::string genus;
    std::vector<ResultRow> rows;
};

Fixture fixture_from_json(const std::string& text);
Fixture load_fixture(const std::string& path);

}  // namespace vsc
