// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace tinysol
{
/// One directory of the bundled corpus.
struct CorpusCase
{
    std::string name;
    std::filesystem::path dir;
    std::vector<std::filesystem::path> contracts;  ///< *.tns, sorted
    std::vector<std::filesystem::path> scenarios;  ///< *.scn, sorted
    std::string note;                              ///< first paragraph of README.md
};

/// TINYSOL_CORPUS when set, else the corpus directory of the source tree.
std::filesystem::path corpus_root();

/// Cases sorted by name. Directories without a scenario are skipped.
std::vector<CorpusCase> corpus_cases(const std::filesystem::path& root = corpus_root());

}  // namespace tinysol
