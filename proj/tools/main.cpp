#include "metra/cli.hpp"

int main(int argc, char** argv) {
    return metra::run(std::vector<std::string>(argv + 1, argv + argc));
}
