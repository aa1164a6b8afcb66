#include "kron/json_io.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "kron/errors.hpp"
#include "kron/rational.hpp"

namespace kron {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ParseError("field '" + field + "': " + why);
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON document");
    if (!doc.is_object()) throw ParseError("top level must be an object");
    return doc;
}

void reject_unknown_keys(const json& obj,
                         std::initializer_list<const char*> allowed,
                         const std::string& what) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed) {
            if (it.key() == key) known = true;
        }
        if (!known) fail(it.key(), "unknown field in " + what);
    }
}

std::vector<int> parse_part_list(const json& value, const std::string& field) {
    if (!value.is_array()) fail(field, "expected an array of integers");
    std::vector<int> parts;
    for (const auto& entry : value) {
        if (!entry.is_number_integer()) {
            fail(field, "expected integer entries");
        }
        parts.push_back(entry.get<int>());
    }
    return parts;
}

Rational parse_rational_entry(const json& value, const std::string& field) {
    if (value.is_number_integer()) {
        return Rational(value.get<long>());
    }
    if (!value.is_string()) {
        fail(field, "rationals must be strings like \"-1/2\" or integers");
    }
    return parse_rational(value.get<std::string>());
}

Matrix<Rational> parse_matrix(const json& value, std::size_t rows,
                              std::size_t cols, const std::string& field) {
    if (!value.is_array() || value.size() != rows) {
        fail(field, "expected " + std::to_string(rows) + " rows");
    }
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = value[i];
        const std::string row_field = field + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != cols) {
            fail(row_field, "expected " + std::to_string(cols) + " entries");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = parse_rational_entry(row[j], row_field);
        }
    }
    return m;
}

json matrix_to_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(format_rational(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

long long parse_size(const json& doc, const std::string& field) {
    if (!doc.contains(field)) fail(field, "missing");
    const json& value = doc[field];
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        fail(field, "expected a nonnegative integer");
    }
    return value.get<long long>();
}

}  // namespace

JsonKind detect_json_kind(const std::string& text) {
    const json doc = parse_document(text);
    if (doc.contains("E") || doc.contains("H") || doc.contains("rows") ||
        doc.contains("cols")) {
        return JsonKind::Pencil;
    }
    return JsonKind::Invariants;
}

std::string invariants_to_json(const KroneckerInvariants& inv) {
    json doc;
    doc["preprojective"] = inv.preprojective;
    doc["preinjective"] = inv.preinjective;
    json regular = json::array();
    for (const auto& [point, sizes] : inv.regular) {
        json entry;
        entry["point"] = point.to_string();
        entry["sizes"] = sizes;
        regular.push_back(std::move(entry));
    }
    doc["regular"] = std::move(regular);
    return doc.dump(2) + "\n";
}

KroneckerInvariants invariants_from_json(const std::string& text) {
    const json doc = parse_document(text);
    reject_unknown_keys(doc, {"preprojective", "regular", "preinjective"},
                        "an invariants document");

    RawInvariants raw;
    if (doc.contains("preprojective")) {
        raw.preprojective = parse_part_list(doc["preprojective"],
                                            "preprojective");
    }
    if (doc.contains("preinjective")) {
        raw.preinjective = parse_part_list(doc["preinjective"],
                                           "preinjective");
    }
    if (doc.contains("regular")) {
        const json& regular = doc["regular"];
        if (!regular.is_array()) fail("regular", "expected an array");
        for (std::size_t i = 0; i < regular.size(); ++i) {
            const std::string field = "regular[" + std::to_string(i) + "]";
            const json& entry = regular[i];
            if (!entry.is_object()) fail(field, "expected an object");
            reject_unknown_keys(entry, {"point", "sizes"}, field);
            if (!entry.contains("point") || !entry["point"].is_string()) {
                fail(field + ".point", "expected a string");
            }
            if (!entry.contains("sizes")) fail(field + ".sizes", "missing");
            raw.regular.emplace_back(
                ProjectivePoint::parse(entry["point"].get<std::string>()),
                parse_part_list(entry["sizes"], field + ".sizes"));
        }
    }
    return normalize(raw);
}

std::string pencil_to_json(const Pencil& p) {
    json doc;
    doc["rows"] = p.rows();
    doc["cols"] = p.cols();
    doc["E"] = matrix_to_json(p.E);
    doc["H"] = matrix_to_json(p.H);
    return doc.dump(2) + "\n";
}

Pencil pencil_from_json(const std::string& text) {
    const json doc = parse_document(text);
    reject_unknown_keys(doc, {"rows", "cols", "E", "H"}, "a pencil document");
    const long long rows = parse_size(doc, "rows");
    const long long cols = parse_size(doc, "cols");
    if (!doc.contains("E")) fail("E", "missing");
    if (!doc.contains("H")) fail("H", "missing");
    const std::size_t r = static_cast<std::size_t>(rows);
    const std::size_t c = static_cast<std::size_t>(cols);
    return Pencil(parse_matrix(doc["E"], r, c, "E"),
                  parse_matrix(doc["H"], r, c, "H"));
}

}  // namespace kron
