// Output records for the command-line front end: named quantities carried
// as exact decimal strings of the working precision.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrt/real.hpp"

namespace wrt {

enum class OutputFormat { text, json, csv };

struct OutputRecord {
    std::vector<long> p;
    std::optional<long> N;
    std::vector<std::pair<std::string, std::string>> quantities;  // insertion order kept
    long prec_bits = kDefaultPrec;
    long elapsed_ms = 0;

    void add(const std::string& name, const Real& v) { quantities.emplace_back(name, v.str()); }
    void add(const std::string& name, const Complex& v) {
        quantities.emplace_back(name + "_re", v.re.str());
        quantities.emplace_back(name + "_im", v.im.str());
    }
    void add(const std::string& name, const Rational& v) { quantities.emplace_back(name, v.str()); }
    void add(const std::string& name, const std::string& v) { quantities.emplace_back(name, v); }
};

std::string format_record(const OutputRecord& rec, OutputFormat fmt);

OutputFormat parse_format(const std::string& name);

}  // namespace wrt
