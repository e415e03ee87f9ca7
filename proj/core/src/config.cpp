#include "frnet/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace frnet {
namespace {

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

using Scope = std::map<std::string, Entry>;

std::string_view trim(std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t' ||
                          v.front() == '\r')) {
        v.remove_prefix(1);
    }
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' ||
                          v.back() == '\r')) {
        v.remove_suffix(1);
    }
    return v;
}

std::string unquote(std::string_view v) {
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
        v = v.substr(1, v.size() - 2);
    }
    return std::string(v);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

Entry& require(Scope& scope, const std::string& field,
               const std::string& where) {
    auto it = scope.find(field);
    if (it == scope.end()) {
        throw ConfigError(where + ": missing field '" + field + "'");
    }
    it->second.used = true;
    return it->second;
}

double number(Scope& scope, const std::string& field,
              const std::string& where) {
    const Entry& e = require(scope, field, where);
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        fail(e.line, "field '" + field + "' is not a number: '" + e.value +
                         "'");
    }
    return value;
}

int integer(Scope& scope, const std::string& field, const std::string& where) {
    const Entry& e = require(scope, field, where);
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        fail(e.line, "field '" + field + "' is not an integer: '" + e.value +
                         "'");
    }
    return value;
}

ComponentModel parse_component(Scope& scope, const std::string& where) {
    const Entry& kind = require(scope, "kind", where);
    if (kind.value == "rlc") {
        return RlcSeries{number(scope, "L", where), number(scope, "R", where),
                         number(scope, "C", where)};
    }
    if (kind.value == "pipe") {
        return Pipe{number(scope, "a", where), number(scope, "b", where)};
    }
    if (kind.value == "rod") {
        return Rod{number(scope, "a", where), number(scope, "b", where)};
    }
    if (kind.value == "spring_damper") {
        return SpringDamper{number(scope, "c", where),
                            number(scope, "k", where)};
    }
    if (kind.value == "raw") {
        const Entry& terms = require(scope, "terms", where);
        try {
            return parse_frac_poly(terms.value);
        } catch (const ParseError& e) {
            fail(terms.line, "field 'terms' invalid at byte " +
                                 std::to_string(e.offset) + ": " + e.what());
        }
    }
    fail(kind.line, "unknown kind '" + kind.value + "'");
}

void reject_unused(const Scope& scope) {
    for (const auto& [key, entry] : scope) {
        if (!entry.used) fail(entry.line, "unknown field '" + key + "'");
    }
}

}  // namespace

NetworkConfig parse_config(std::string_view text) {
    Scope top, comp_a, comp_b;
    bool saw_a = false, saw_b = false;
    Scope* current = &top;
    std::string current_name = "top level";
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        const std::string_view body = trim(raw);
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body == "[component_a]") {
                current = &comp_a;
                current_name = "[component_a]";
                saw_a = true;
            } else if (body == "[component_b]") {
                current = &comp_b;
                current_name = "[component_b]";
                saw_b = true;
            } else {
                fail(line, "unknown section '" + std::string(body) + "'");
            }
            continue;
        }
        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) {
            fail(line, "expected 'key = value', got '" + std::string(body) +
                           "'");
        }
        const std::string key{trim(body.substr(0, eq))};
        const std::string value = unquote(trim(body.substr(eq + 1)));
        if (key.empty()) fail(line, "empty key");
        if (!current->emplace(key, Entry{value, line}).second) {
            fail(line, "duplicate field '" + key + "' in " + current_name);
        }
    }

    NetworkConfig cfg;
    const Entry& topo = require(top, "topology", "top level");
    if (topo.value == "tree") {
        cfg.spec.topology = Topology::tree;
    } else if (topo.value == "multitree") {
        cfg.spec.topology = Topology::multitree;
    } else if (topo.value == "ladder") {
        cfg.spec.topology = Topology::ladder;
    } else {
        fail(topo.line, "unknown topology '" + topo.value + "'");
    }

    if (cfg.spec.topology == Topology::multitree) {
        cfg.spec.m = integer(top, "m", "top level");
        if (cfg.spec.m < 1) {
            fail(top["m"].line, "field 'm' must be a positive integer");
        }
        cfg.spec.n = integer(top, "n", "top level");
        if (cfg.spec.n < 0) {
            fail(top["n"].line, "field 'n' must be a non-negative integer");
        }
        if (auto it = top.find("convention"); it != top.end()) {
            it->second.used = true;
            if (it->second.value == "recursion") {
                cfg.convention = MultitreeConvention::recursion;
            } else if (it->second.value == "paper") {
                cfg.convention = MultitreeConvention::paper;
            } else {
                fail(it->second.line, "unknown convention '" +
                                          it->second.value + "'");
            }
        }
    } else {
        // tree and ladder ignore these keys entirely
        for (const char* key : {"m", "n", "convention"}) {
            if (auto it = top.find(key); it != top.end()) {
                it->second.used = true;
            }
        }
    }

    if (!saw_a) throw ConfigError("missing section [component_a]");
    if (!saw_b) throw ConfigError("missing section [component_b]");
    cfg.spec.component_a = parse_component(comp_a, "[component_a]");
    cfg.spec.component_b = parse_component(comp_b, "[component_b]");
    reject_unused(top);
    reject_unused(comp_a);
    reject_unused(comp_b);
    return cfg;
}

NetworkConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace frnet
