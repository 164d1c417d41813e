#include "cli_app.hpp"

int main(int argc, char** argv) { return inoue_cli::run(argc, argv); }
