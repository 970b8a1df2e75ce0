"""Workers asynchrones pour traitement en arrière-plan."""

