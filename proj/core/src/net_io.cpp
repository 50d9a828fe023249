#include "qclif/net_io.hpp"

#include "qclif/errors.hpp"
#include "qclif/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qclif {

using nlohmann::json;

Field parse_field_name(const std::string& name) {
    if (name == "Q") return Field::rationals();
    if (name.rfind("GF(", 0) == 0 && name.back() == ')') {
        std::string inner = name.substr(3, name.size() - 4);
        try {
            unsigned long p = std::stoul(inner);
            return Field::prime(static_cast<uint32_t>(p));
        } catch (const std::invalid_argument&) {
            throw InputError("bad field name: " + name);
        } catch (const std::out_of_range&) {
            throw InputError("bad field name: " + name);
        }
    }
    if (name == "Q(s)") return Field::function_field();
    throw InputError("bad field name: " + name);
}

namespace {

Scalar coefficient_from_json(const json& j, const Field& field) {
    if (j.is_number_integer()) return Scalar::of(field, j.get<long>());
    if (j.is_string()) return Scalar::of(field, parse_rational(j.get<std::string>()));
    throw InputError("net coefficients must be integers or \"num/den\" strings");
}

} // namespace

NetOfQuadrics parse_net_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw InputError("net file is not valid JSON");
    if (doc.contains("inputs") && doc["inputs"].is_object() && doc["inputs"].contains("net"))
        doc = doc["inputs"];
    if (!doc.contains("field") || !doc["field"].is_string())
        throw InputError("net file needs a \"field\" string");
    if (!doc.contains("net")) throw InputError("net file needs a \"net\" array");
    Field field = parse_field_name(doc["field"].get<std::string>());

    const json& rows = doc["net"];
    if (!rows.is_array() || rows.size() != 6) throw InputError("\"net\" must be a 6x6 array");
    NetOfQuadrics::Entries entries{};
    for (int i = 0; i < 6; ++i) {
        const json& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != 6) throw InputError("\"net\" must be a 6x6 array");
        for (int j = 0; j < 6; ++j) {
            const json& entry = row[static_cast<size_t>(j)];
            if (!entry.is_array() || entry.size() != 3)
                throw InputError("each net entry must list 3 coefficients");
            for (int m = 0; m < 3; ++m)
                entries[i][j][m] = coefficient_from_json(entry[static_cast<size_t>(m)], field);
        }
    }
    try {
        return NetOfQuadrics(std::move(entries));
    } catch (const DomainError& e) {
        throw InputError(e.what()); // symmetry violations are input defects
    }
}

NetOfQuadrics load_net_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open net file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_net_document(buffer.str());
}

std::string net_to_document(const NetOfQuadrics& net) {
    json rows = json::array();
    for (int i = 0; i < 6; ++i) {
        json row = json::array();
        for (int j = 0; j < 6; ++j) {
            json entry = json::array();
            for (int m = 0; m < 3; ++m) {
                const Scalar& c = net.entry(i, j)[m];
                if (net.field().is_finite())
                    entry.push_back(static_cast<long>(c.as_fp().value));
                else if (is_integer(c.as_rational()))
                    entry.push_back(static_cast<long>(c.as_rational().get_num().get_si()));
                else
                    entry.push_back(c.to_string());
            }
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    json doc;
    doc["field"] = net.field().to_string();
    doc["net"] = std::move(rows);
    return doc.dump(2);
}

} // namespace qclif
