#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <utility>

#include "kaehler/differential.hpp"
#include "kaehler/errors.hpp"

namespace kaehler {

enum class Format { Plain, Latex, Json };

/// Slot naming for the three rings in play. Canonical spellings:
///   x ring      x1..xm                     ("x" accepted when m = 1)
///   ambient     x's, then d1x1..dNxm
///   pure y      y1_1..ym_N                 (aliases diXj and, for m = 1, yj)
struct NameScheme {
    enum Kind { XOnly, Ambient, PureY };

    Kind kind;
    unsigned m;
    unsigned N;

    static NameScheme x_only(unsigned m) { return {XOnly, m, 0}; }
    static NameScheme ambient(unsigned m, unsigned N) { return {Ambient, m, N}; }
    static NameScheme pure_y(unsigned m, unsigned N) { return {PureY, m, N}; }

    unsigned num_slots() const {
        switch (kind) {
            case XOnly: return m;
            case Ambient: return m + N * m;
            case PureY: return N * m;
        }
        return 0;
    }

    std::string slot_name(unsigned slot, Format fmt = Format::Plain) const {
        bool latex = fmt == Format::Latex;
        auto xname = [&](unsigned i) {
            return latex ? "x_{" + std::to_string(i) + "}" : "x" + std::to_string(i);
        };
        auto yname = [&](unsigned i, unsigned j) {
            if (latex) return "y_{" + std::to_string(i) + "," + std::to_string(j) + "}";
            return "y" + std::to_string(i) + "_" + std::to_string(j);
        };
        auto dname = [&](unsigned i, unsigned j) {
            if (latex) return "d^{" + std::to_string(j) + "}x_{" + std::to_string(i) + "}";
            return "d" + std::to_string(j) + "x" + std::to_string(i);
        };
        switch (kind) {
            case XOnly:
                return xname(slot + 1);
            case Ambient:
                if (slot < m) return xname(slot + 1);
                return dname((slot - m) % m + 1, (slot - m) / m + 1);
            case PureY:
                return yname(slot % m + 1, slot / m + 1);
        }
        return "?";
    }

    /// Resolves an identifier to a slot; accepts all alias spellings.
    std::optional<unsigned> lookup(const std::string& id) const {
        auto as_x = [&](unsigned i) -> std::optional<unsigned> {
            if (i < 1 || i > m || kind == PureY) return std::nullopt;
            return i - 1;
        };
        auto as_y = [&](unsigned i, unsigned j) -> std::optional<unsigned> {
            if (kind == XOnly || i < 1 || i > m || j < 1 || j > N) return std::nullopt;
            unsigned off = (j - 1) * m + (i - 1);
            return kind == Ambient ? m + off : off;
        };

        if (auto t = split_prefixed(id, 'x'); t && t->second == 0) return as_x(t->first);
        if (id == "x" && m == 1 && kind != PureY) return as_x(1);
        if (auto d = parse_d_form(id)) return as_y(d->first, d->second);
        if (auto t = split_prefixed(id, 'y')) {
            if (t->second != 0) return as_y(t->first, t->second);
            if (m == 1) return as_y(1, t->first);  // y3 means y1_3 in one variable
        }
        return std::nullopt;
    }

private:
    // Indices above this are out of range for every scheme in practice and
    // would otherwise risk unsigned wraparound on adversarial input.
    static constexpr unsigned kMaxIndex = 1000000;

    static std::optional<unsigned> read_index(const std::string& id, std::size_t& k) {
        if (k >= id.size() || !std::isdigit(static_cast<unsigned char>(id[k]))) return std::nullopt;
        unsigned v = 0;
        for (; k < id.size() && std::isdigit(static_cast<unsigned char>(id[k])); ++k) {
            v = v * 10 + static_cast<unsigned>(id[k] - '0');
            if (v > kMaxIndex) return std::nullopt;
        }
        return v;
    }

    /// "p12" -> (12, 0); "p1_2" -> (1, 2); mismatch -> nullopt.
    static std::optional<std::pair<unsigned, unsigned>> split_prefixed(const std::string& id,
                                                                      char prefix) {
        if (id.size() < 2 || id[0] != prefix) return std::nullopt;
        std::size_t k = 1;
        auto first = read_index(id, k);
        if (!first) return std::nullopt;
        if (k == id.size()) return std::make_pair(*first, 0u);
        if (id[k] != '_') return std::nullopt;
        ++k;
        auto second = read_index(id, k);
        if (!second || k != id.size() || *second == 0) return std::nullopt;
        return std::make_pair(*first, *second);
    }

    /// "d2x1" -> (i=1, j=2).
    static std::optional<std::pair<unsigned, unsigned>> parse_d_form(const std::string& id) {
        if (id.size() < 4 || id[0] != 'd') return std::nullopt;
        std::size_t k = 1;
        auto j = read_index(id, k);
        if (!j || k >= id.size() || id[k] != 'x') return std::nullopt;
        ++k;
        auto i = read_index(id, k);
        if (!i || k != id.size()) return std::nullopt;
        return std::make_pair(*i, *j);
    }
};

}  // namespace kaehler
