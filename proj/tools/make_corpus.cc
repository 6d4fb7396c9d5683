// Copyright 2026 The heraldq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Writes the checked-in .net corpus from the circuit builders.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "heraldq/verify.h"

int main(int argc, char **argv) {
    if (argc != 2) {
        std::cerr << "usage: make_corpus <output-dir>\n";
        return 1;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    for (const auto &entry : heraldq::corpus_manifest()) {
        const auto path = dir / std::string(entry.file);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << heraldq::corpus_text(entry);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return 1;
        }
        std::cout << path.string() << "\n";
    }
    return 0;
}
