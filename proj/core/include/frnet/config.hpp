#pragma once

#include <string>
#include <string_view>

#include "frnet/network.hpp"

namespace frnet {

/// Config text rejected; the message names the offending line and field.
struct ConfigError : Error {
    using Error::Error;
};

/// A parsed network description: the spec plus the multitree coefficient
/// convention (default recursion).
struct NetworkConfig {
    NetworkSpec spec;
    MultitreeConvention convention = MultitreeConvention::recursion;
};

/// Parses the sectioned key-value format:
///
///   topology = "tree" | "multitree" | "ladder"
///   m = <positive int>                   # multitree only
///   n = <non-negative int>               # multitree only
///   convention = "recursion" | "paper"   # multitree only
///   [component_a]
///   kind = "rlc" | "pipe" | "rod" | "spring_damper" | "raw"
///   # rlc: L=, R=, C=   pipe/rod: a=, b=   spring_damper: c=, k=
///   # raw: terms="<operator text>"
///   [component_b]
///   ...
///
/// '#' starts a comment; values may be double-quoted; whitespace around
/// keys and values is ignored. m, n, and convention are ignored for tree
/// and ladder. Unknown sections, unknown fields, missing fields, duplicate
/// fields, and malformed numbers raise ConfigError.
NetworkConfig parse_config(std::string_view text);

/// parse_config over the file's contents; ConfigError when unreadable.
NetworkConfig load_config(const std::string& path);

}  // namespace frnet
