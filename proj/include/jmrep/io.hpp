#pragma once

// JSON encodings. All basis indices and letters are 1-based; encoders emit
// canonical form (sorted index tuples, no zero terms).

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jmrep/membership.hpp"

namespace jmrep::io {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected an object with key \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
    return *it;
}

// No field in these schemas is fractional; a float anywhere is malformed.
inline bool contains_float(const json& j) {
    if (j.is_number_float()) return true;
    if (j.is_array() || j.is_object())
        for (const auto& v : j)
            if (contains_float(v)) return true;
    return false;
}

template <typename T>
T get(const json& j, const char* what) {
    if (contains_float(j)) throw InputError(std::string("bad value for ") + what + ": expected integers");
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad value for ") + what + ": " + e.what());
    }
}

inline Genus genus_of(const json& j) {
    const auto g = get<int>(field(j, "genus"), "genus");
    if (g < 1) throw InputError("genus must be >= 1");
    return Genus(g);
}

}  // namespace detail

inline Genus genus_from_json(const json& j) { return detail::genus_of(j); }

inline json to_json(const HVector& v) {
    return {{"genus", v.genus().value()}, {"coeffs", std::vector<std::int64_t>(v.coeffs().begin(), v.coeffs().end())}};
}

inline json to_json(const IntMatrix& m) { return {{"genus", m.genus().value()}, {"rows", m.rows()}}; }
inline json to_json(const SymplecticMatrix& m) { return to_json(m.matrix()); }

namespace detail {

template <int K>
json terms_to_json(const Wedge<K>& w) {
    json terms = json::array();
    for (const auto& [idx, c] : w.terms()) terms.push_back({{"idx", idx}, {"twice", c.twice()}});
    return terms;
}

template <int K>
Wedge<K> terms_from_json(Genus g, const json& terms, const char* what) {
    if (!terms.is_array()) throw InputError(std::string("\"") + what + "\" must be an array of terms");
    Wedge<K> w(g);
    for (const auto& t : terms) {
        const auto idx = get<std::vector<int>>(field(t, "idx"), "idx");
        if (static_cast<int>(idx.size()) != K) throw InputError("index tuple has wrong length");
        std::array<int, K> arr{};
        for (int i = 0; i < K; ++i) {
            arr[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)];
            if (arr[static_cast<std::size_t>(i)] < 1 || arr[static_cast<std::size_t>(i)] > g.dim())
                throw InputError("wedge index out of range");
            for (int k = 0; k < i; ++k)
                if (arr[static_cast<std::size_t>(k)] == arr[static_cast<std::size_t>(i)])
                    throw InputError("repeated wedge index");
        }
        w.add_term(arr, HalfInt::from_twice(get<std::int64_t>(field(t, "twice"), "twice")));
    }
    return w;
}

inline HVector coeffs_from_json(Genus g, const json& j) {
    auto v = get<std::vector<std::int64_t>>(j, "coeffs");
    if (static_cast<int>(v.size()) != g.dim()) throw InputError("vector needs " + std::to_string(g.dim()) + " coefficients");
    return HVector(g, std::move(v));
}

inline IntMatrix rows_from_json(Genus g, const json& j) {
    try {
        return IntMatrix(g, get<std::vector<std::vector<std::int64_t>>>(j, "rows"));
    } catch (const OutOfRange& e) {
        throw InputError(e.what());
    }
}

inline SymplecticMatrix symplectic_rows_from_json(Genus g, const json& j) {
    auto m = rows_from_json(g, j);
    if (!symplectic_check(m)) throw InputError("matrix is not symplectic");
    return SymplecticMatrix(std::move(m));
}

}  // namespace detail

inline HVector hvector_from_json(const json& j) {
    return detail::coeffs_from_json(detail::genus_of(j), detail::field(j, "coeffs"));
}

inline IntMatrix matrix_from_json(const json& j) {
    return detail::rows_from_json(detail::genus_of(j), detail::field(j, "rows"));
}

inline SymplecticMatrix symplectic_from_json(const json& j) {
    return detail::symplectic_rows_from_json(detail::genus_of(j), detail::field(j, "rows"));
}

template <int K>
json to_json(const Wedge<K>& w) {
    return {{"genus", w.genus().value()}, {"terms", detail::terms_to_json(w)}};
}

template <int K>
Wedge<K> wedge_from_json(const json& j) {
    return detail::terms_from_json<K>(detail::genus_of(j), detail::field(j, "terms"), "terms");
}

// Compound documents carry the genus once at top level.

inline json to_json(const Phi2Element& p) {
    return {{"genus", p.genus().value()},
            {"eta", detail::terms_to_json(p.eta)},
            {"y", std::vector<std::int64_t>(p.y.coeffs().begin(), p.y.coeffs().end())}};
}

inline Phi2Element phi2_from_json(const json& j) {
    const Genus g = detail::genus_of(j);
    return {detail::terms_from_json<2>(g, detail::field(j, "eta"), "eta"), detail::coeffs_from_json(g, detail::field(j, "y"))};
}

inline json to_json(const Rho2Element& f) {
    return {{"genus", f.genus().value()}, {"r", detail::terms_to_json(f.r)}, {"R", f.R.matrix().rows()}};
}

inline Rho2Element rho2_from_json(const json& j) {
    const Genus g = detail::genus_of(j);
    return {detail::terms_from_json<3>(g, detail::field(j, "r"), "r"), detail::symplectic_rows_from_json(g, detail::field(j, "R"))};
}

inline json to_json(const FreeWord& w) { return {{"genus", w.genus().value()}, {"letters", w.letters()}}; }

namespace detail {

inline FreeWord letters_to_word(Genus g, const json& j) {
    // Accept either a bare letter array or a word document.
    const json& letters = j.is_object() ? field(j, "letters") : j;
    if (j.is_object() && j.contains("genus") && genus_of(j) != g) throw InputError("word genus mismatch");
    try {
        return FreeWord(g, get<std::vector<int>>(letters, "letters"));
    } catch (const OutOfRange& e) {
        throw InputError(e.what());
    }
}

inline std::vector<FreeWord> images_from_json(Genus g, const json& arr, const char* what) {
    if (!arr.is_array()) throw InputError(std::string("\"") + what + "\" must be an array");
    if (static_cast<int>(arr.size()) != g.dim())
        throw InputError(std::string("\"") + what + "\" needs " + std::to_string(g.dim()) + " entries");
    std::vector<FreeWord> out;
    for (const auto& w : arr) out.push_back(letters_to_word(g, w));
    return out;
}

inline json images_to_json(const EndomorphismSpec& e) {
    json arr = json::array();
    for (const auto& w : e.images()) arr.push_back(w.letters());
    return arr;
}

}  // namespace detail

inline FreeWord word_from_json(const json& j) { return detail::letters_to_word(detail::genus_of(j), j); }

inline json to_json(const EndomorphismSpec& e) {
    return {{"genus", e.genus().value()}, {"images", detail::images_to_json(e)}};
}

inline EndomorphismSpec endo_from_json(const json& j) {
    const Genus g = detail::genus_of(j);
    return EndomorphismSpec(g, detail::images_from_json(g, detail::field(j, "images"), "images"));
}

inline json to_json(const Eijk& e) {
    json terms = json::array();
    for (const auto& [t, v] : e.values)
        if (v != 0) terms.push_back({{"idx", t}, {"value", v}});
    return {{"genus", e.genus.value()}, {"terms", std::move(terms)}};
}

}  // namespace jmrep::io
