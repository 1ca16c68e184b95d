#include <cstdio>

int main() {
    std::puts("smtrace: subcommands pending");
    return 0;
}
