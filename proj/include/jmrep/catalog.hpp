#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "jmrep/io.hpp"
#include "jmrep/membership.hpp"

#ifndef JMREP_DEFAULT_CATALOG_DIR
#define JMREP_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace jmrep {

/// A free-group automorphism offered as a mapping class, with its inverse.
/// Entries are admitted only by validate_entry().
struct CatalogEntry {
    std::string name;
    EndomorphismSpec spec;
    EndomorphismSpec inverse_spec;
    bool claimed_handlebody = false;

    Genus genus() const noexcept { return spec.genus(); }
};

struct ValidationReport {
    bool inverse = false;      // (a) two-sided inverse on every generator
    bool symplectic = false;   // (b) symplectic abelianisation
    bool boundary = false;     // (c) fixes the boundary word exactly
    bool handlebody = true;    // (d) only checked when claimed
    std::vector<std::string> failures;

    bool valid() const noexcept { return failures.empty(); }
};

inline ValidationReport validate_entry(const CatalogEntry& c, std::size_t limit = kDefaultWordLimit) {
    ValidationReport rep;
    const Genus g = c.genus();
    if (c.inverse_spec.genus() != g) {
        rep.failures.emplace_back("inverse has a different genus");
        rep.handlebody = !c.claimed_handlebody;
        return rep;
    }

    const auto id = EndomorphismSpec::identity(g);
    try {
        rep.inverse = endo_compose(c.spec, c.inverse_spec, limit) == id && endo_compose(c.inverse_spec, c.spec, limit) == id;
    } catch (const WordTooLong&) {
        rep.inverse = false;
    }
    if (!rep.inverse) rep.failures.emplace_back("inverse: spec and inverse_spec do not compose to the identity");

    std::vector<HVector> cols;
    for (const auto& w : c.spec.images()) cols.push_back(phi2_eval_word(w).y);
    rep.symplectic = symplectic_check(IntMatrix::from_columns(g, cols));
    if (!rep.symplectic) rep.failures.emplace_back("symplectic: abelianisation is not symplectic");

    try {
        rep.boundary = endo_apply(c.spec, boundary_word(g), limit) == boundary_word(g);
    } catch (const WordTooLong&) {
        rep.boundary = false;
    }
    if (!rep.boundary) rep.failures.emplace_back("boundary: boundary word is not fixed");

    if (c.claimed_handlebody) {
        rep.handlebody = false;
        if (rep.symplectic) {
            try {
                const auto f = tau2_from_endo(c.spec);
                rep.handlebody = handlebody_sp_check(f.R) && handlebody_membership(f);
            } catch (const Error&) {
                rep.handlebody = false;
            }
        }
        if (!rep.handlebody) rep.failures.emplace_back("handlebody: claimed handlebody entry fails the handlebody test");
    }
    return rep;
}

namespace io {

inline json to_json(const CatalogEntry& c) {
    return {{"name", c.name},
            {"genus", c.genus().value()},
            {"images", detail::images_to_json(c.spec)},
            {"inverse_images", detail::images_to_json(c.inverse_spec)},
            {"claimed_handlebody", c.claimed_handlebody}};
}

inline CatalogEntry entry_from_json(const json& j) {
    const Genus g = detail::genus_of(j);
    return CatalogEntry{detail::get<std::string>(detail::field(j, "name"), "name"),
                        EndomorphismSpec(g, detail::images_from_json(g, detail::field(j, "images"), "images")),
                        EndomorphismSpec(g, detail::images_from_json(g, detail::field(j, "inverse_images"), "inverse_images")),
                        detail::get<bool>(detail::field(j, "claimed_handlebody"), "claimed_handlebody")};
}

inline json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

}  // namespace io

inline std::filesystem::path default_catalog_dir() {
    if (const char* env = std::getenv("JMREP_CATALOG_DIR"); env && *env) return env;
    return JMREP_DEFAULT_CATALOG_DIR;
}

/// Every entry file (*.json) under <dir>/g<genus>, as read, sorted by name.
inline std::vector<CatalogEntry> load_catalog_files(Genus g, const std::filesystem::path& dir = default_catalog_dir()) {
    std::vector<CatalogEntry> out;
    const auto sub = dir / ("g" + std::to_string(g.value()));
    if (!std::filesystem::is_directory(sub)) return out;
    for (const auto& f : std::filesystem::directory_iterator(sub)) {
        if (f.path().extension() != ".json") continue;
        auto entry = io::entry_from_json(io::read_json_file(f.path()));
        if (entry.genus() != g) throw InputError(f.path().string() + ": genus does not match its directory");
        out.push_back(std::move(entry));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
}

/// The shipped catalog for genus g: entry files that pass validate_entry().
/// Genera without a catalog directory give an empty list.
inline std::vector<CatalogEntry> catalog(Genus g, const std::filesystem::path& dir = default_catalog_dir()) {
    auto all = load_catalog_files(g, dir);
    std::erase_if(all, [](const CatalogEntry& c) { return !validate_entry(c).valid(); });
    return all;
}

}  // namespace jmrep
