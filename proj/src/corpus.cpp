// tinysol: executable core calculus for smart contracts
// Copyright 2026 The tinysol Authors.
// SPDX-License-Identifier: Apache-2.0

#include <tinysol/corpus.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>

#ifndef TINYSOL_CORPUS_DIR
#define TINYSOL_CORPUS_DIR "corpus"
#endif

namespace tinysol
{
namespace fs = std::filesystem;

fs::path corpus_root()
{
    if (const char* env = std::getenv("TINYSOL_CORPUS"); env && *env)
        return env;
    return TINYSOL_CORPUS_DIR;
}

namespace
{
std::string first_paragraph(const fs::path& readme)
{
    std::ifstream in{readme};
    std::string line, out;
    while (std::getline(in, line))
    {
        if (line.empty())
        {
            if (!out.empty())
                break;
            continue;
        }
        if (line.front() == '#')
            continue;
        out += (out.empty() ? "" : " ") + line;
    }
    return out;
}
}  // namespace

std::vector<CorpusCase> corpus_cases(const fs::path& root)
{
    std::vector<CorpusCase> cases;
    if (!fs::is_directory(root))
        return cases;
    for (const auto& entry : fs::directory_iterator{root})
    {
        if (!entry.is_directory())
            continue;
        CorpusCase c{entry.path().filename().string(), entry.path(), {}, {}, {}};
        for (const auto& f : fs::directory_iterator{entry.path()})
        {
            if (f.path().extension() == ".tns")
                c.contracts.push_back(f.path());
            else if (f.path().extension() == ".scn")
                c.scenarios.push_back(f.path());
        }
        if (c.scenarios.empty())
            continue;
        std::sort(c.contracts.begin(), c.contracts.end());
        std::sort(c.scenarios.begin(), c.scenarios.end());
        c.note = first_paragraph(entry.path() / "README.md");
        cases.push_back(std::move(c));
    }
    std::sort(cases.begin(), cases.end(),
        [](const CorpusCase& a, const CorpusCase& b) { return a.name < b.name; });
    return cases;
}

}  // namespace tinysol
