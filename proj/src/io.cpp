#include "impbase/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace impbase {

namespace {

// Numeric-aware label order, so inferred universes list "2" before "10".
bool natural_less(const std::string& a, const std::string& b) {
    auto numeric = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c);
        });
    };
    if (numeric(a) && numeric(b)) {
        if (a.size() != b.size()) return a.size() < b.size();
    }
    return a < b;
}

// Collects labels while lines are parsed as raw tokens; indices are assigned
// once the whole file has been read. A frozen pool (explicit universe line)
// rejects unseen labels instead.
class LabelPool {
public:
    int intern(const std::string& label) {
        auto it = index_.find(label);
        if (it != index_.end()) return it->second;
        if (frozen_)
            throw ParseError(current_line_, "label '" + label +
                                            "' is missing from the universe line");
        int id = static_cast<int>(labels_.size());
        labels_.push_back(label);
        index_.emplace(label, id);
        return id;
    }

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }
    void set_line(std::size_t line) { current_line_ = line; }

    // Declared order when frozen, natural label order otherwise.
    Universe to_universe() const {
        if (frozen_) return Universe(labels_);
        std::vector<std::string> sorted = labels_;
        std::sort(sorted.begin(), sorted.end(), natural_less);
        return Universe(sorted);
    }

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    bool frozen_ = false;
    std::size_t current_line_ = 0;
};

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& text) {
    std::istringstream iss(text);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

// `{}` denotes the empty side and must stand alone.
ElementSet parse_side(const std::vector<std::string>& toks, std::size_t lineno, LabelPool& pool) {
    if (toks.size() == 1 && toks[0] == "{}") return {};
    ElementSet s;
    for (const std::string& t : toks) {
        if (t == "{}")
            throw ParseError(lineno, "'{}' must stand alone on its side");
        s.insert(pool.intern(t));
    }
    return s;
}

} // namespace

Basis read_imp(std::istream& in) {
    LabelPool pool;
    struct RawImp {
        std::vector<std::string> lhs, rhs;
    };
    std::vector<RawImp> raw;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        auto toks = tokens_of(body);
        if (toks.empty()) continue;

        auto arrow = std::find(toks.begin(), toks.end(), "->");
        if (arrow == toks.end())
            throw ParseError(lineno, "expected 'LHS -> RHS', no '->' found");
        std::vector<std::string> lhs(toks.begin(), arrow);
        std::vector<std::string> rhs(arrow + 1, toks.end());
        if (lhs.empty())
            throw ParseError(lineno, "missing left-hand side (write '{}' for an empty premise)");
        if (rhs.empty())
            throw ParseError(lineno, "missing right-hand side");
        if (std::find(rhs.begin(), rhs.end(), "->") != rhs.end())
            throw ParseError(lineno, "more than one '->'");

        pool.set_line(lineno);
        parse_side(lhs, lineno, pool); // interns and validates the tokens
        parse_side(rhs, lineno, pool);
        raw.push_back({std::move(lhs), std::move(rhs)});
    }

    Universe universe = pool.to_universe();
    auto resolve = [&](const std::vector<std::string>& toks) {
        if (toks.size() == 1 && toks[0] == "{}") return ElementSet{};
        ElementSet s;
        for (const std::string& t : toks) s.insert(*universe.index_of(t));
        return s;
    };

    std::vector<Implication> imps;
    imps.reserve(raw.size());
    bool unit = true;
    for (const RawImp& r : raw) {
        Implication imp(resolve(r.lhs), resolve(r.rhs));
        if (imp.conclusion.count() > 1) unit = false;
        imps.push_back(imp);
    }
    return Basis(universe, std::move(imps), unit ? BasisForm::unit : BasisForm::aggregated);
}

Basis read_imp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_imp(in);
}

void write_imp(std::ostream& out, const Basis& basis) {
    for (const Implication& imp : basis.implications)
        out << implication_to_string(basis.universe, imp) << '\n';
}

ClosureSystem read_fam(std::istream& in) {
    LabelPool pool;
    std::vector<std::vector<std::string>> raw;
    bool first_content = true;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        auto toks = tokens_of(body);
        if (toks.empty()) continue;

        if (first_content && toks[0] == "universe:") {
            for (std::size_t i = 1; i < toks.size(); ++i) pool.intern(toks[i]);
            pool.freeze();
            first_content = false;
            continue;
        }
        first_content = false;

        pool.set_line(lineno);
        parse_side(toks, lineno, pool);
        raw.push_back(std::move(toks));
    }

    Universe universe = pool.to_universe();
    std::vector<ElementSet> family;
    family.reserve(raw.size());
    for (const auto& toks : raw) {
        ElementSet s;
        if (!(toks.size() == 1 && toks[0] == "{}")) {
            for (const std::string& t : toks) s.insert(*universe.index_of(t));
        }
        family.push_back(s);
    }
    return ClosureSystem(universe, std::move(family));
}

ClosureSystem read_fam_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_fam(in);
}

void write_fam(std::ostream& out, const ClosureSystem& system) {
    out << "universe:";
    for (const std::string& label : system.universe().labels()) out << ' ' << label;
    out << '\n';
    for (ElementSet c : system.closed_family())
        out << set_to_string(system.universe(), c) << '\n';
}

Basis rebind(const Basis& basis, const Universe& target) {
    std::vector<int> remap(basis.universe.size());
    for (std::size_t i = 0; i < basis.universe.size(); ++i) {
        auto idx = target.index_of(basis.universe.label(static_cast<int>(i)));
        if (!idx)
            throw std::invalid_argument("label '" + basis.universe.label(static_cast<int>(i)) +
                                        "' is not in the target universe");
        remap[i] = *idx;
    }
    auto remap_set = [&](ElementSet s) {
        ElementSet out;
        for (int e : s) out.insert(remap[static_cast<std::size_t>(e)]);
        return out;
    };
    std::vector<Implication> imps;
    imps.reserve(basis.size());
    for (const Implication& imp : basis.implications)
        imps.emplace_back(remap_set(imp.premise), remap_set(imp.conclusion));
    return Basis(target, std::move(imps), basis.form);
}

std::string set_to_string(const Universe& universe, ElementSet s) {
    if (s.empty()) return "{}";
    std::string out;
    for (int e : s) {
        if (!out.empty()) out += ' ';
        out += universe.label(e);
    }
    return out;
}

std::string implication_to_string(const Universe& universe, const Implication& imp) {
    return set_to_string(universe, imp.premise) + " -> " + set_to_string(universe, imp.conclusion);
}

} // namespace impbase
