// Reference values for the two benchmark manifolds, embedded as printed
// decimal strings, plus the digit-matching rule used by the regression
// gate (agreement within one unit in the last printed digit).
#pragma once

#include <string>
#include <vector>

#include "wrt/real.hpp"

namespace wrt {

struct TableRow {
    long n;             // level
    const char* z_re;   // exact invariant, printed digits
    const char* z_im;
    const char* a_re;   // dominant-term asymptotics, printed digits
    const char* a_im;
    bool slow;          // behind the --slow gate
};

struct ReferenceTable {
    int id;                    // 1 or 2
    std::vector<long> p;
    std::vector<TableRow> rows;
};

const ReferenceTable& reference_table(int id);

// |value - printed| <= 1 unit in the printed last place
bool matches_printed(const Real& value, const std::string& printed, mpfr_prec_t prec);

// unit in the last place of a printed decimal string
Rational printed_ulp(const std::string& printed);
Rational printed_value(const std::string& printed);

}  // namespace wrt
