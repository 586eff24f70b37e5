// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pathabs/checker.hpp"

namespace pathabs {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Direct: return "direct";
        case Method::Scc: return "scc";
        case Method::Recursive: return "recursive";
    }
    return "direct";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "direct") return Method::Direct;
    if (name == "scc") return Method::Scc;
    if (name == "recursive") return Method::Recursive;
    return std::nullopt;
}

}  // namespace pathabs
