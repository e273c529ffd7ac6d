#include <iostream>

#include "ctube/suites.hpp"

// Regenerates the rank-2 golden fixture on stdout. Redirect into
// tests/golden/worked_n2.json after any deliberate format change, and
// eyeball the diff: the file freezes hand-checked values.
int main() {
    std::cout << ctube::worked_n2_fixture_json();
    return 0;
}
