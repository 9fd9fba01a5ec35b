// Textual catalog files: a line-based format that round-trips the built-in
// catalog (load(emit(catalog)) == catalog), so alternative catalogs can be
// fed to the CLI.  Loading validates every entry: it must build, satisfy the
// right Leibniz identity symbolically, and be nilpotent.
#pragma once

#include <fstream>
#include <ostream>

#include "catalog.hpp"
#include "degeneration.hpp"  // strip_spaces

namespace nilalg {

struct CatalogParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CatalogValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool operator==(const CatalogEntryData& a, const CatalogEntryData& b) {
    return a.name == b.name && a.base == b.base && a.base_subs == b.base_subs &&
           a.reps == b.reps && a.products == b.products && a.params == b.params &&
           a.exclusions == b.exclusions && a.note == b.note;
}

namespace detail {

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

inline std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string piece;
    while (std::getline(in, piece, sep)) {
        piece = strip_spaces(piece);
        if (!piece.empty()) out.push_back(piece);
    }
    return out;
}

}  // namespace detail

inline void emit_catalog(std::ostream& os, const std::vector<CatalogEntryData>& data) {
    for (const auto& e : data) {
        os << "entry " << e.name << "\n";
        if (!e.base.empty()) os << "  base " << e.base << "\n";
        if (!e.base_subs.empty()) os << "  base-subs " << e.base_subs << "\n";
        for (const auto& r : e.reps) os << "  rep " << r << "\n";
        if (!e.products.empty()) os << "  products " << e.products << "\n";
        if (!e.params.empty()) os << "  params " << detail::join(e.params, ", ") << "\n";
        if (!e.exclusions.empty())
            os << "  exclusions " << detail::join(e.exclusions, "; ") << "\n";
        if (!e.note.empty()) os << "  note " << e.note << "\n";
        os << "end\n";
    }
}

inline std::vector<CatalogEntryData> parse_catalog_data(std::istream& in) {
    std::vector<CatalogEntryData> out;
    CatalogEntryData cur;
    bool open = false;
    std::string line;
    size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw CatalogParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_spaces(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        std::string rest = strip_spaces(line.substr(word.size()));
        if (word == "entry") {
            if (open) fail("nested entry");
            cur = CatalogEntryData{};
            cur.name = rest;
            if (cur.name.empty()) fail("entry without a name");
            open = true;
        } else if (word == "end") {
            if (!open) fail("end without entry");
            out.push_back(cur);
            open = false;
        } else if (!open) {
            fail("directive outside an entry: " + word);
        } else if (word == "base") {
            cur.base = rest;
        } else if (word == "base-subs") {
            cur.base_subs = rest;
        } else if (word == "rep") {
            cur.reps.push_back(rest);
        } else if (word == "products") {
            cur.products = rest;
        } else if (word == "params") {
            cur.params = detail::split_list(rest, ',');
        } else if (word == "exclusions") {
            cur.exclusions = detail::split_list(rest, ';');
        } else if (word == "note") {
            cur.note = rest;
        } else {
            fail("unknown directive: " + word);
        }
    }
    if (open) fail("unterminated entry " + cur.name);
    return out;
}

// Builds and validates each entry; names must be unique, every structure
// tensor must satisfy the right Leibniz identity symbolically (at generic
// parameters) and be nilpotent.
inline std::vector<CatalogEntry> validate_catalog(const std::vector<CatalogEntryData>& data) {
    std::vector<CatalogEntry> out;
    std::set<std::string> names;
    for (const auto& d : data) {
        if (!names.insert(d.name).second)
            throw CatalogValidationError("duplicate entry name: " + d.name);
        CatalogEntry e = build_catalog_entry(d);
        NonzeroScope scope(e.exclusion_polys);
        if (auto v = e.alg.right_leibniz_violation())
            throw CatalogValidationError(d.name + ": " + *v);
        if (!e.alg.is_nilpotent())
            throw CatalogValidationError(d.name + ": not nilpotent");
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogParseError("cannot open catalog: " + path);
    return validate_catalog(parse_catalog_data(in));
}

}  // namespace nilalg
