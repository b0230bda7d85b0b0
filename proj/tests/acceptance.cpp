#include <iostream>

#include "twistrel/verify.hpp"

int main() {
    int failures = twistrel::run_acceptance(std::cout);
    if (failures)
        std::cout << failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria passed\n";
    return failures == 0 ? 0 : 1;
}
