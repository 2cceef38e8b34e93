// Writes or checks the verification fixtures.
//   fixture_oracle write DIR
//   fixture_oracle check DIR     exit 1 if any committed file differs
#include "family_oracle.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv)
{
    if (argc != 3 || (std::string(argv[1]) != "write" && std::string(argv[1]) != "check")) {
        std::cerr << "usage: fixture_oracle write|check DIR\n";
        return 2;
    }
    const bool write = std::string(argv[1]) == "write";
    const std::filesystem::path dir = argv[2];
    int stale = 0;
    for (const auto& e : poisson::oracle::build_all()) {
        const auto path = dir / (e.id + ".json");
        const std::string text = poisson::expected_to_json(e);
        if (write) {
            std::ofstream(path) << text;
            std::cout << "wrote " << path.string() << '\n';
            continue;
        }
        std::ifstream in(path);
        std::stringstream committed;
        committed << in.rdbuf();
        if (!in || committed.str() != text) {
            std::cout << "stale: " << path.string() << '\n';
            ++stale;
        }
    }
    if (!write)
        std::cout << (stale ? "fixtures differ from the oracle\n" : "fixtures match the oracle\n");
    return stale ? 1 : 0;
}
