// Serialization: weight-vector and spectrum JSON, matrix CSV, DOT export.
//
// Writers are hand-rolled so output bytes are deterministic: doubles render
// with 17 significant digits, exact scalars as quoted "p/q" tokens.
// Parsing accepts JSON numbers and token strings in either backend; the
// exact backend converts integers and token strings exactly, and JSON
// float literals via their binary64 value.

#pragma once

#include "wtg/scalar.hpp"
#include "wtg/spectral.hpp"
#include "wtg/threshold.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace wtg::io {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

template <scalar S>
std::string json_scalar(const S& v) {
    if constexpr (scalar_traits<S>::is_exact)
        return "\"" + to_token(v) + "\"";
    else
        return to_token(v);
}

template <scalar S>
S scalar_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return scalar_traits<S>::from_int(j.get<long long>());
    if (j.is_number_unsigned())
        return scalar_traits<S>::from_int(static_cast<long long>(j.get<unsigned long long>()));
    if (j.is_number_float())
        return S(j.get<double>());
    if (j.is_string()) {
        try {
            return parse_token<S>(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
    }
    throw parse_error("expected a scalar, got " + std::string(j.type_name()));
}

template <scalar S>
std::vector<S> scalar_array_from_json(const nlohmann::json& j, const char* field,
                                      std::size_t expected) {
    if (!j.is_array())
        throw parse_error(std::string(field) + " must be an array");
    if (j.size() != expected)
        throw parse_error(std::string(field) + " must have n-1 entries");
    std::vector<S> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(scalar_from_json<S>(v));
    return out;
}

inline std::size_t order_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw parse_error("expected an object with integer field \"n\"");
    const long long n = j["n"].get<long long>();
    if (n < 1) throw parse_error("\"n\" must be >= 1");
    return static_cast<std::size_t>(n);
}

inline nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace detail

// {"n": <int>, "weights": [w2, ..., wn]}
template <scalar S>
std::string to_json(const weight_vector<S>& w) {
    std::ostringstream out;
    out << "{\"n\":" << w.order() << ",\"weights\":[";
    for (std::size_t i = 2; i <= w.order(); ++i) {
        if (i > 2) out << ",";
        out << detail::json_scalar(w.at_node(i));
    }
    out << "]}";
    return out.str();
}

template <scalar S>
weight_vector<S> weights_from_json(const std::string& text) {
    const nlohmann::json j = detail::parse_json(text);
    const std::size_t n = detail::order_from_json(j);
    if (!j.contains("weights")) throw parse_error("missing field \"weights\"");
    return weight_vector<S>(detail::scalar_array_from_json<S>(j["weights"], "weights", n - 1));
}

// {"n": <int>, "mu": [mu2, ..., mun]} -- the implied zero is not serialized.
template <scalar S>
std::string to_json(const spectrum<S>& mu) {
    std::ostringstream out;
    out << "{\"n\":" << mu.order() << ",\"mu\":[";
    for (std::size_t i = 2; i <= mu.order(); ++i) {
        if (i > 2) out << ",";
        out << detail::json_scalar(mu.at_node(i));
    }
    out << "]}";
    return out.str();
}

template <scalar S>
spectrum<S> spectrum_from_json(const std::string& text) {
    const nlohmann::json j = detail::parse_json(text);
    const std::size_t n = detail::order_from_json(j);
    if (!j.contains("mu")) throw parse_error("missing field \"mu\"");
    return spectrum<S>(detail::scalar_array_from_json<S>(j["mu"], "mu", n - 1));
}

// One row per line, comma-separated scalar tokens.
template <scalar S>
std::string to_csv(const sym_matrix<S>& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j > 0) out << ",";
            out << to_token(m(i, j));
        }
        out << "\n";
    }
    return out.str();
}

template <scalar S>
std::vector<std::vector<S>> rows_from_csv(const std::string& text) {
    std::vector<std::vector<S>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<S> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            const auto first = cell.find_first_not_of(" \t");
            const auto last = cell.find_last_not_of(" \t");
            if (first == std::string::npos) throw parse_error("empty CSV cell");
            try {
                row.push_back(parse_token<S>(cell.substr(first, last - first + 1)));
            } catch (const std::invalid_argument& e) {
                throw parse_error(e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("empty CSV");
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw parse_error("ragged CSV rows");
    return rows;
}

template <scalar S>
std::vector<std::vector<S>> square_rows_from_csv(const std::string& text) {
    auto rows = rows_from_csv<S>(text);
    if (rows[0].size() != rows.size()) throw parse_error("CSV matrix is not square");
    return rows;
}

// Undirected DOT graph: every node declared, one edge per nonzero weight
// (node i links to all earlier nodes), zero weights omitted.
template <scalar S>
std::string to_dot(const weight_vector<S>& w) {
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 1; v <= w.order(); ++v) out << "  " << v << ";\n";
    for (std::size_t i = 2; i <= w.order(); ++i) {
        if (w.at_node(i) == S(0)) continue;
        for (std::size_t j = 1; j < i; ++j)
            out << "  " << j << " -- " << i
                << " [weight=\"" << to_token(w.at_node(i)) << "\"];\n";
    }
    out << "}";
    return out.str();
}

} // namespace wtg::io
