// CLI entry point; subcommands are implemented in src/census.cpp.
int main() { return 0; }
