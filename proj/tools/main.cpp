#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    auto parsed = qseries::cli::parse_command_line(argc, argv, std::cout, std::cerr);
    if (!parsed.spec) {
        return parsed.exit_code;
    }
    return qseries::cli::run(*parsed.spec, std::cout, std::cerr);
}
