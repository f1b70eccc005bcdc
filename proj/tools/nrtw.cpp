// CLI entry point; subcommands live in nrtw/cli.hpp once the solution
// registry is in place.
#include <cstdio>

int main() {
    std::puts("nrtw: command surface not wired up yet");
    return 2;
}
