#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "unmixed/oracle.hpp"

namespace unmixed::cli {

// Exit codes shared by check and oracle: 0 unmixed, 1 mixed or not
// bipartite, 2 input error.

struct CheckOptions {
    std::string path;  // "-" reads standard input
    bool quiet = false;
    bool pretty = false;
};

struct OracleOptions {
    std::string path;
    bool covers = false;
    bool pretty = false;
    std::size_t max_n = oracle::kDefaultCap;
};

enum class GenerateKind { Preorder, Bipartite, Tree };

struct GenerateOptions {
    GenerateKind kind = GenerateKind::Preorder;
    int relation_size = 0;  // preorder
    double probability = 0.0;
    int side1 = 0;  // bipartite
    int side2 = 0;
    int tree_size = 0;  // tree
    std::uint64_t seed = 0;
    std::string out_path;  // empty writes to stdout
};

struct CrosscheckOptions {
    int count = 0;
    int max_n = 12;
    std::uint64_t seed = 0;
    std::string dump_path = "crosscheck-mismatch.edges";
    bool inject_fault = false;  // test hook: deliberately corrupt one verdict
};

int run_check(const CheckOptions& options, std::ostream& out, std::ostream& err);
int run_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);
int run_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);
int run_crosscheck(const CrosscheckOptions& options, std::ostream& out, std::ostream& err);

}  // namespace unmixed::cli
