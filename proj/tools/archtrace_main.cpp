#include "archtrace/cli.hpp"

int main(int argc, char** argv) {
    return archtrace::cli::run(argc, argv);
}
