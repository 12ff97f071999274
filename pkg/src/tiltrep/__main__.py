from tiltrep.cli import main

main()
