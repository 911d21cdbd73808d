# Command-line tests driving main() and run()
