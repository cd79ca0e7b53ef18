#include "wrt/output.hpp"

#include <sstream>

#include <json.hpp>

namespace wrt {

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw validation_error("format must be one of text|json|csv");
}

std::string format_record(const OutputRecord& rec, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::text: {
            std::ostringstream os;
            os << "p =";
            for (long v : rec.p) os << ' ' << v;
            if (rec.N) os << "\nN = " << *rec.N;
            for (const auto& [k, v] : rec.quantities) os << '\n' << k << " = " << v;
            os << "\nprec_bits = " << rec.prec_bits;
            os << "\nelapsed_ms = " << rec.elapsed_ms << '\n';
            return os.str();
        }
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["p"] = rec.p;
            if (rec.N) j["N"] = *rec.N;
            for (const auto& [k, v] : rec.quantities) j[k] = v;
            j["prec_bits"] = rec.prec_bits;
            j["elapsed_ms"] = rec.elapsed_ms;
            return j.dump() + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream head, row;
            head << "p";
            row << '"';
            for (std::size_t i = 0; i < rec.p.size(); ++i) row << (i ? "," : "") << rec.p[i];
            row << '"';
            if (rec.N) {
                head << ",N";
                row << ',' << *rec.N;
            }
            for (const auto& [k, v] : rec.quantities) {
                head << ',' << k;
                row << ',' << v;
            }
            head << ",prec_bits,elapsed_ms";
            row << ',' << rec.prec_bits << ',' << rec.elapsed_ms;
            return head.str() + "\n" + row.str() + "\n";
        }
    }
    return {};
}

}  // namespace wrt
