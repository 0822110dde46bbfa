from htdecomp.cli import main

main()
