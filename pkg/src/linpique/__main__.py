from linpique.cli import main

main()
