#include "sgds/io.hpp"

#include <fstream>
#include <sstream>

namespace sgds {

namespace {

// Strips the comment tail and surrounding whitespace.
std::string clean_line(const std::string& raw) {
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = line.find_last_not_of(" \t\r");
    return line.substr(a, b - a + 1);
}

}  // namespace

SgdsMap parse_system(const std::string& text) {
    std::vector<std::string> points;
    std::vector<std::pair<std::string, std::string>> succ;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto err = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "point") {
            std::string id, extra;
            if (!(ls >> id) || ls >> extra) err("expected `point <id>`");
            for (const auto& p : points)
                if (p == id) err("duplicate point " + id);
            points.push_back(id);
        } else if (kw == "map") {
            std::string src, dst, extra;
            if (!(ls >> src >> dst) || ls >> extra) err("expected `map <src> <dst>`");
            auto declared = [&](const std::string& id) {
                for (const auto& p : points)
                    if (p == id) return true;
                return false;
            };
            if (!declared(src)) err("undeclared point " + src);
            if (!declared(dst)) err("undeclared point " + dst);
            for (const auto& [s, d] : succ)
                if (s == src) err("duplicate map source " + src);
            succ.emplace_back(src, dst);
        } else {
            err("unknown directive `" + kw + "`");
        }
    }
    if (points.empty()) throw ParseError("no points");
    return SgdsMap(std::move(points), std::move(succ));
}

std::string serialize_system(const SgdsMap& sys) {
    std::ostringstream out;
    for (const auto& p : sys.names()) out << "point " << p << "\n";
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (sys.in_domain(static_cast<int>(i)))
            out << "map " << sys.name(static_cast<int>(i)) << " "
                << sys.name(sys.successor(static_cast<int>(i))) << "\n";
    return out.str();
}

AdmissibleFamily parse_fibers(const SgdsMap& sys, const std::string& text) {
    AdmissibleFamily y;
    y.fibers.assign(sys.size(), CircleSet::empty());
    std::vector<char> assigned(sys.size(), 0);
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto err = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw, id;
        if (!(ls >> kw >> id)) err("expected `fiber <point> <set>` or `class <repr> <set>`");
        std::string rest;
        std::getline(ls, rest);
        if (kw != "fiber" && kw != "class") err("unknown directive `" + kw + "`");
        int x;
        try {
            x = sys.index(id);
        } catch (const std::exception&) {
            err("unknown point " + id);
            return y;  // unreachable
        }
        CircleSet f;
        try {
            f = CircleSet::parse(rest);
        } catch (const std::exception& e) {
            err(std::string("bad fiber: ") + e.what());
        }
        std::vector<int> targets = kw == "class" ? orbit(sys, x) : std::vector<int>{x};
        for (int t : targets) {
            if (assigned[t]) err("point " + sys.name(t) + " assigned twice");
            assigned[t] = 1;
            y.fibers[t] = f;
        }
    }
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (!assigned[i])
            throw ParseError("point " + sys.name(static_cast<int>(i)) + " has no fiber");
    return y;
}

std::string serialize_fibers(const SgdsMap& sys, const AdmissibleFamily& y) {
    std::ostringstream out;
    for (std::size_t i = 0; i < sys.size(); ++i)
        out << "fiber " << sys.name(static_cast<int>(i)) << " "
            << y.fiber(static_cast<int>(i)).str() << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace sgds
