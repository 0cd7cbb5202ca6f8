#pragma once

#include <string>

#include <json.hpp>

#include "nestlat/bimodule.hpp"

namespace nestlat {

// Documents are emitted with keys in insertion order so identical inputs
// produce byte-identical output.
using Json = nlohmann::ordered_json;

inline mpq_class parse_rational(const Json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) {
        try {
            mpq_class q(j.get<std::string>(), 10);
            if (q.get_den() == 0)
                throw std::invalid_argument("zero denominator");
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad rational literal: " + j.dump());
        }
    }
    throw std::invalid_argument("bad rational literal: " + j.dump());
}

inline std::string rational_str(const mpq_class& q) { return q.get_str(); }

inline Elem elem_from_json(const Json& j, const Ring& ring) {
    switch (ring.kind()) {
        case Ring::Kind::rationals:
            return Elem::rational(parse_rational(j), ring);
        case Ring::Kind::prime_field: {
            if (j.is_number_integer()) {
                long v = j.get<long>();
                long p = static_cast<long>(ring.modulus());
                return Elem::gf(static_cast<std::uint64_t>(((v % p) + p) % p), ring);
            }
            if (j.is_string()) return Elem::gf(std::stoull(j.get<std::string>()), ring);
            throw std::invalid_argument("bad GF literal: " + j.dump());
        }
        case Ring::Kind::quaternions: {
            if (!j.is_array() || j.size() != 4)
                throw std::invalid_argument("quaternion literal must be [a, b, c, d]");
            return Elem::quaternion(Quaternion(parse_rational(j[0]), parse_rational(j[1]),
                                               parse_rational(j[2]), parse_rational(j[3])),
                                    ring);
        }
    }
    throw std::logic_error("unreachable");
}

inline Json elem_to_json(const Elem& e) {
    switch (e.ring().kind()) {
        case Ring::Kind::rationals:
            return rational_str(e.as_rational());
        case Ring::Kind::prime_field:
            return e.as_residue();
        case Ring::Kind::quaternions: {
            const Quaternion& q = e.as_quaternion();
            return Json::array({rational_str(q.a), rational_str(q.b), rational_str(q.c),
                                rational_str(q.d)});
        }
    }
    throw std::logic_error("unreachable");
}

inline Matrix matrix_entries_from_json(const Json& entries, const Ring& ring,
                                       std::size_t rows, std::size_t cols) {
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("matrix entries: wrong row count");
    Matrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!entries[i].is_array() || entries[i].size() != cols)
            throw std::invalid_argument("matrix entries: wrong column count");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = elem_from_json(entries[i][j], ring);
    }
    return m;
}

inline Matrix matrix_from_json(const Json& j) {
    Ring ring = Ring::parse(j.at("ring").get<std::string>());
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    return matrix_entries_from_json(j.at("entries"), ring, rows, cols);
}

inline Json matrix_entries_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json matrix_to_json(const Matrix& m) {
    Json j;
    j["ring"] = m.ring().to_string();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = matrix_entries_to_json(m);
    return j;
}

/// Generators document: {"ring", "rows", "cols", "generators": [entries…]}.
inline std::vector<Matrix> generators_from_json(const Json& j, Ring* ring_out = nullptr,
                                                std::size_t* rows_out = nullptr,
                                                std::size_t* cols_out = nullptr) {
    Ring ring = Ring::parse(j.at("ring").get<std::string>());
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    std::vector<Matrix> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(matrix_entries_from_json(g, ring, rows, cols));
    if (ring_out) *ring_out = ring;
    if (rows_out) *rows_out = rows;
    if (cols_out) *cols_out = cols;
    return gens;
}

inline std::string side_name(Side s) {
    return s == Side::left_row ? "left" : "right";
}

inline Json echelon_to_json(const EchelonMatrix& e) {
    Json j;
    j["side"] = side_name(e.side);
    j["matrix"] = matrix_to_json(e.mat);
    j["rank"] = e.rank();
    j["pivots"] = e.pivots;
    return j;
}

inline Json shape_to_json(const BlockShape& s) {
    Json j;
    j["M"] = s.row_parts;
    j["N"] = s.col_parts;
    return j;
}

inline Json tuple_to_json(const NestTuple& t) {
    Json j;
    j["side"] = side_name(t.side);
    j["shape"] = shape_to_json(t.shape);
    Json reps = Json::array();
    for (const auto& r : t.reps) reps.push_back(echelon_to_json(r));
    j["reps"] = std::move(reps);
    return j;
}

inline Json descriptor_to_json(const BimoduleDescriptor& d) {
    Json j;
    j["i"] = d.i();
    j["js"] = d.js;
    return j;
}

/// Shape string as used on the command line: "M=(1,2);N=(1,2)".
inline BlockShape parse_shape(const std::string& s) {
    auto parse_part = [](const std::string& part,
                         const std::string& name) -> std::vector<std::size_t> {
        std::string prefix = name + "=(";
        if (part.rfind(prefix, 0) != 0 || part.back() != ')')
            throw std::invalid_argument("bad shape component: " + part);
        std::string body = part.substr(prefix.size(), part.size() - prefix.size() - 1);
        std::vector<std::size_t> out;
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? comma
                                                                          : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789 ") != std::string::npos)
                throw std::invalid_argument("bad shape component: " + part);
            out.push_back(std::stoull(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (out.empty()) throw std::invalid_argument("bad shape component: " + part);
        return out;
    };
    std::size_t sep = s.find(';');
    if (sep == std::string::npos)
        throw std::invalid_argument("shape must look like \"M=(1,2);N=(1,2)\"");
    return BlockShape(parse_part(s.substr(0, sep), "M"),
                      parse_part(s.substr(sep + 1), "N"));
}

}  // namespace nestlat
