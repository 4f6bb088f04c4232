#pragma once

#include <string>
#include <vector>

#include "aplab/common.hpp"

namespace aplab {

inline constexpr int kCheckpointSchemaVersion = 1;

// Resume state for an interrupted scan. `lines` holds the already-serialized
// report rows for every key up to and including `cursor`, so a resumed run
// can reproduce the uninterrupted report byte for byte even if the output
// path changed in between (the parameter hash deliberately ignores paths).
struct checkpoint {
    int schema_version = kCheckpointSchemaVersion;
    std::string task;
    std::string param_hash;
    u64 cursor = 0;
    u64 findings = 0;  // violation/counterexample records so far
    u64 undecided = 0;
    std::vector<std::string> lines;
};

// Atomic: write-temp-then-rename.
void checkpoint_save(const checkpoint& cp, const std::string& path);

// Throws checkpoint_error on parse failures or schema mismatch.
checkpoint checkpoint_load(const std::string& path);

// FNV-1a over the canonical parameter serialization, as a fixed-width hex string.
std::string fnv1a_hex(const std::string& data);

} // namespace aplab
