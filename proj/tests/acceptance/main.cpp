#include "criteria.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    dioph::acceptance::Context ctx;
    const std::string suite = argc > 1 ? argv[1] : "all";
    std::size_t failed = 0, total = 0;
    dioph::acceptance::run_suite(suite, ctx, [&](const dioph::acceptance::Outcome& o) {
        std::cout << dioph::acceptance::format_line(o) << std::endl;
        ++total;
        if (!o.passed) ++failed;
    });
    std::cout << (total - failed) << "/" << total << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
