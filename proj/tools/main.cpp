#include <iostream>

#include "qhorn/cli.hpp"

namespace {

// Best-effort format sniff for error reporting before parsing succeeds.
qhorn::Format sniff_format(const std::vector<std::string>& args) {
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format" && i + 1 < args.size()) {
            try {
                return qhorn::parse_format(args[i + 1]);
            } catch (...) {
                return qhorn::Format::Json;
            }
        }
        if (args[i].rfind("--format=", 0) == 0) {
            try {
                return qhorn::parse_format(args[i].substr(9));
            } catch (...) {
                return qhorn::Format::Json;
            }
        }
    }
    return qhorn::Format::Json;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const qhorn::CliConfig cfg = qhorn::parse_args(args);
        return qhorn::run(cfg, std::cout, std::cerr);
    } catch (const qhorn::HelpRequested& e) {
        std::cout << e.what();
        return 0;
    } catch (const qhorn::UsageError& e) {
        if (sniff_format(args) == qhorn::Format::Json)
            std::cerr << R"({"error":{"message":")" << e.what() << R"(","type":"usage"}})" << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        if (sniff_format(args) == qhorn::Format::Json)
            std::cerr << R"({"error":{"message":")" << e.what() << R"(","type":"numeric"}})" << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
